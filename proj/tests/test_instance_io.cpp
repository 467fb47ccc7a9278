#include "brp/instance_io.hpp"

#include <filesystem>
#include <fstream>

#include "brp/exact.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace brp;
using test::six_block_yard;
using test::yard;

namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("brp_io_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("read_instance parses the canonical format") {
    auto [y, meta] = read_instance("3 3 6\n2 1 6\n3 3 2 5\n1 4\n");
    CHECK(y == six_block_yard());
    CHECK(meta.width == 3);
    CHECK(meta.height == 3);
    CHECK(meta.blocks == 6);

    auto [single, m2] = read_instance("1 1 1\n1 1\n");
    CHECK(single == yard(1, 1, {{1}}));

    auto [commented, m3] = read_instance("# header\n\n3 3 6\n2 1 6\n\n3 3 2 5\n1 4\n# end\n");
    CHECK(commented == six_block_yard());
}

TEST_CASE("read_instance rejects malformed input") {
    CHECK_THROWS_AS(read_instance("2 2 3\n2 1 2\n2 3 4\n"), ParseError);  // count mismatch
    CHECK_THROWS_AS(read_instance("2 2 4\n2 1 2\n2 2 3\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(read_instance("2 2 3\n3 1 2 3\n0\n"), ParseError);    // over height
    CHECK_THROWS_AS(read_instance("2 2 2\n2 0 1\n0\n"), ParseError);      // bad priority
    CHECK_THROWS_AS(read_instance("2 2 2\n2 1 x\n0\n"), ParseError);      // not a number
    CHECK_THROWS_AS(read_instance("2 2 2\n2 1 2\n"), ParseError);         // missing stack
    CHECK_THROWS_AS(read_instance(""), ParseError);
    CHECK_THROWS_AS(read_instance("2 2 5\n2 1 2\n2 3 4\n"), ParseError);  // n > w*h
}

TEST_CASE("write then read is the identity") {
    std::string text = write_instance(six_block_yard());
    CHECK(text == "3 3 6\n2 1 6\n3 3 2 5\n1 4\n");
    auto [back, meta] = read_instance(text);
    CHECK(back == six_block_yard());
    CHECK(write_instance(back) == text);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Yard y = test::random_yard(seed, 6, 5, 25);
        auto [again, m] = read_instance(write_instance(y));
        CHECK(again == y);
        CHECK(write_instance(again) == write_instance(y));
    }
}

TEST_CASE("generator determinism and bounds") {
    CHECK(write_instance(generate(4, 4, 12, 9)) == write_instance(generate(4, 4, 12, 9)));
    CHECK(generate(4, 4, 12, 9) != generate(4, 4, 12, 10));
    CHECK_THROWS_AS(generate(2, 2, 5, 0), std::invalid_argument);
    CHECK(generate(2, 2, 0, 0).empty());

    Yard nearly_full = generate(50, 4, 199, 11);
    int free = 0;
    for (int s = 1; s <= nearly_full.width(); ++s) free += nearly_full.free_slots(s);
    CHECK(free == 1);
}

TEST_CASE("generated yards satisfy the solvability condition") {
    auto check_condition = [](const Yard& y, int n) {
        for (int s = 1; s <= y.width(); ++s) {
            const auto& st = y.stack(s);
            for (int t = 0; t < static_cast<int>(st.size()); ++t) {
                long long slack = static_cast<long long>(y.width()) * y.height() - n + st[t] - 1;
                CHECK(y.height() - (t + 1) <= slack);
            }
        }
    };
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        check_condition(generate(4, 4, 15, seed), 15);
        check_condition(generate(10, 7, 69, seed), 69);
        check_condition(generate(50, 4, 199, seed), 199);
    }
}

TEST_CASE("small generated yards are solvable") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Yard y = test::random_yard(seed, 4, 4, 10);
        CHECK(solve_exact(y).status == ExactStatus::Optimal);
    }
}

TEST_CASE("manifest round-trip") {
    fs::path dir = temp_dir("manifest");
    auto entries = generate_dataset(dir, 3, 3, 6, 4, 42);
    REQUIRE(entries.size() == 4);
    auto back = read_manifest(dir / "manifest.tsv");
    REQUIRE(back.size() == 4);
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].id == entries[i].id);
        CHECK(back[i].seed == entries[i].seed);
        auto [y, meta] = read_instance_file(dir / back[i].path);
        CHECK(y.block_count() == 6);
        CHECK(meta.id == back[i].id);
    }
    fs::remove_all(dir);
}

TEST_CASE("lbri grid enumerates the published ranges") {
    auto configs = lbri_configs();
    CHECK(configs.size() == 84);
    CHECK(configs.size() * 100 == 8400);

    auto n_values = [&](int w, int h) {
        std::vector<int> out;
        for (const auto& c : configs)
            if (c.width == w && c.height == h) out.push_back(c.blocks);
        return out;
    };
    CHECK(n_values(50, 4) == std::vector<int>{196, 197, 198, 199});
    CHECK(n_values(1000, 10) ==
          std::vector<int>{9990, 9991, 9992, 9993, 9994, 9995, 9996, 9997, 9998, 9999});
    CHECK(n_values(100, 7).front() == 693);
    CHECK(n_values(100, 7).back() == 699);

    fs::path dir = temp_dir("lbri");
    auto entries = generate_lbri(dir, 1, 5);  // one instance per triple
    CHECK(entries.size() == 84);
    auto [y, meta] = read_instance_file(dir / entries.front().path);
    CHECK(y.width() == 50);
    CHECK(y.height() == 4);
    CHECK(y.block_count() == 196);
    fs::remove_all(dir);
}
