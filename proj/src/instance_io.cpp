#include "brp/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace brp {

namespace {

bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::vector<long long> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

std::pair<Yard, InstanceMeta> read_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<long long>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        rows.push_back(parse_ints(line, lineno));
    }
    if (rows.empty()) throw ParseError("empty instance");
    if (rows[0].size() != 3) throw ParseError("header must be `w h n`");
    const long long w = rows[0][0], h = rows[0][1], n = rows[0][2];
    if (w < 1 || h < 1 || n < 0 || n > w * h)
        throw ParseError("bad dimensions: w=" + std::to_string(w) + " h=" + std::to_string(h) +
                         " n=" + std::to_string(n));
    if (static_cast<long long>(rows.size()) != w + 1)
        throw ParseError("expected " + std::to_string(w) + " stack lines, got " +
                         std::to_string(rows.size() - 1));

    std::vector<std::vector<Priority>> stacks;
    long long total = 0;
    for (long long s = 1; s <= w; ++s) {
        const auto& row = rows[s];
        if (row.empty()) throw ParseError("stack " + std::to_string(s) + ": missing slot count");
        const long long count = row[0];
        if (count < 0 || count > h)
            throw ParseError("stack " + std::to_string(s) + ": slot count " +
                             std::to_string(count) + " exceeds height " + std::to_string(h));
        if (static_cast<long long>(row.size()) != count + 1)
            throw ParseError("stack " + std::to_string(s) + ": expected " + std::to_string(count) +
                             " priorities");
        std::vector<Priority> st;
        for (long long k = 1; k <= count; ++k) {
            if (row[k] < 1 || row[k] > std::numeric_limits<int>::max() / 2)
                throw ParseError("stack " + std::to_string(s) + ": priority out of range: " +
                                 std::to_string(row[k]));
            st.push_back(static_cast<Priority>(row[k]));
        }
        total += count;
        stacks.push_back(std::move(st));
    }
    if (total != n)
        throw ParseError("count mismatch: header says " + std::to_string(n) + " blocks, stacks list " +
                         std::to_string(total));

    Yard yard;
    try {
        yard = Yard(static_cast<int>(w), static_cast<int>(h), std::move(stacks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    InstanceMeta meta;
    meta.width = static_cast<int>(w);
    meta.height = static_cast<int>(h);
    meta.blocks = static_cast<int>(n);
    return {std::move(yard), std::move(meta)};
}

std::pair<Yard, InstanceMeta> read_instance_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    auto [yard, meta] = read_instance(buf.str());
    meta.id = file.stem().string();
    return {std::move(yard), std::move(meta)};
}

std::string write_instance(const Yard& y) {
    std::ostringstream out;
    out << y.width() << ' ' << y.height() << ' ' << y.block_count() << '\n';
    for (int s = 1; s <= y.width(); ++s) {
        const auto& st = y.stack(s);
        out << st.size();
        for (Priority p : st) out << ' ' << p;
        out << '\n';
    }
    return out.str();
}

Yard generate(int w, int h, int n, std::uint64_t seed) {
    if (w < 1 || h < 1) throw std::invalid_argument("generate: w and h must be positive");
    if (n < 0 || n > w * h)
        throw std::invalid_argument("generate: n must be in [0, w*h]");

    SplitMix64 rng(seed);
    std::vector<Priority> perm(n);
    std::vector<int> tier_of(n + 1, 0);
    std::vector<std::vector<Priority>> stacks;
    std::vector<int> open;
    for (;;) {
        std::iota(perm.begin(), perm.end(), 1);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.bounded(static_cast<std::uint64_t>(i) + 1)]);

        stacks.assign(w, {});
        open.resize(w);
        std::iota(open.begin(), open.end(), 0);
        for (Priority p : perm) {
            const std::size_t pick = rng.bounded(open.size());
            const int s = open[pick];
            stacks[s].push_back(p);
            tier_of[p] = static_cast<int>(stacks[s].size());
            if (static_cast<int>(stacks[s].size()) == h) {
                open[pick] = open.back();
                open.pop_back();
            }
        }

        bool ok = true;
        for (Priority p = 1; p <= n && ok; ++p)
            ok = h - tier_of[p] <= static_cast<long long>(w) * h - n + (p - 1);
        if (ok) return Yard(w, h, std::move(stacks));
    }
}

void write_manifest(const std::filesystem::path& file,
                    const std::vector<ManifestEntry>& entries) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    for (const auto& e : entries)
        out << e.id << '\t' << e.path << '\t' << e.width << '\t' << e.height << '\t' << e.blocks
            << '\t' << e.seed << '\n';
    if (!out) throw std::runtime_error("write failed: " + file.string());
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file.string());
    std::vector<ManifestEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        std::istringstream row(line);
        ManifestEntry e;
        if (!(row >> e.id >> e.path >> e.width >> e.height >> e.blocks >> e.seed))
            throw ParseError(file.string() + ": line " + std::to_string(lineno) +
                             ": expected `id path w h n seed`");
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace {

ManifestEntry emit_instance(const std::filesystem::path& out_dir, const std::string& id, int w,
                            int h, int n, std::uint64_t seed) {
    Yard yard = generate(w, h, n, seed);
    ManifestEntry e{id, id + ".txt", w, h, n, seed};
    std::ofstream out(out_dir / e.path);
    if (!out) throw std::runtime_error("cannot write " + (out_dir / e.path).string());
    out << write_instance(yard);
    if (!out) throw std::runtime_error("write failed: " + (out_dir / e.path).string());
    return e;
}

}  // namespace

std::vector<ManifestEntry> generate_dataset(const std::filesystem::path& out_dir, int w, int h,
                                            int n, int count, std::uint64_t seed) {
    std::filesystem::create_directories(out_dir);
    SplitMix64 seeds(seed);
    std::vector<ManifestEntry> entries;
    for (int i = 0; i < count; ++i) {
        std::string id = "gen_w" + std::to_string(w) + "_h" + std::to_string(h) + "_n" +
                         std::to_string(n) + "_i" + std::to_string(i);
        entries.push_back(emit_instance(out_dir, id, w, h, n, seeds.next()));
    }
    write_manifest(out_dir / "manifest.tsv", entries);
    return entries;
}

std::vector<LbriConfig> lbri_configs() {
    std::vector<LbriConfig> out;
    for (int w : {50, 100, 500, 1000})
        for (int h : {4, 7, 10})
            for (int n = w * h - h; n <= w * h - 1; ++n) out.push_back({w, h, n});
    return out;
}

std::vector<ManifestEntry> generate_lbri(const std::filesystem::path& out_dir,
                                         int count_per_config, std::uint64_t seed) {
    std::filesystem::create_directories(out_dir);
    SplitMix64 seeds(seed);
    std::vector<ManifestEntry> entries;
    for (const LbriConfig& c : lbri_configs())
        for (int i = 0; i < count_per_config; ++i) {
            std::string id = "lbri_w" + std::to_string(c.width) + "_h" + std::to_string(c.height) +
                             "_n" + std::to_string(c.blocks) + "_i" + std::to_string(i);
            entries.push_back(
                emit_instance(out_dir, id, c.width, c.height, c.blocks, seeds.next()));
        }
    write_manifest(out_dir / "manifest.tsv", entries);
    return entries;
}

}  // namespace brp
