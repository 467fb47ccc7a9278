#ifndef BRP_INSTANCE_IO_HPP
#define BRP_INSTANCE_IO_HPP

/*
    Canonical instance format, random instance generation, and dataset
    manifests.

    Instance file: first line `w h n`; then one line per stack, bottom to
    top: the slot count followed by the priorities.  Blank lines and
    `#`-prefixed comment lines are ignored.  write_instance emits exactly
    this shape (single spaces, newline-terminated), so write after read is
    the identity on canonical files.

    Manifest file: one instance per line, tab-separated
    `id path w h n seed`, `#` comments allowed; paths are resolved
    relative to the manifest's directory.
*/

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "brp/yard.hpp"

namespace brp {

class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceMeta {
    enum class Source { Generated, File };

    std::string id;
    int width = 0;
    int height = 0;
    int blocks = 0;
    std::uint64_t seed = 0;
    Source source = Source::File;
};

// Fixed 64-bit generator (SplitMix64) so that instances are reproducible
// across runs from a single seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) by 128-bit multiply-shift.
    std::uint64_t bounded(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

std::pair<Yard, InstanceMeta> read_instance(const std::string& text);
std::pair<Yard, InstanceMeta> read_instance_file(const std::filesystem::path& file);
std::string write_instance(const Yard& y);

// Random yard with blocks 1..n: a random permutation assigned, in order,
// to the first free slot of a uniformly random non-full stack.  A layout
// leaving any block i at tier t with h - t > w*h - n + (i - 1) could be
// impossible to empty, so the whole yard is discarded and redrawn until
// the condition holds for every block.  Deterministic in (w, h, n, seed).
Yard generate(int w, int h, int n, std::uint64_t seed);

struct ManifestEntry {
    std::string id;
    std::string path;  // relative to the manifest file
    int width = 0;
    int height = 0;
    int blocks = 0;
    std::uint64_t seed = 0;
};

void write_manifest(const std::filesystem::path& file,
                    const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& file);

// Writes `count` generated instances plus `manifest.tsv` into out_dir;
// per-instance seeds are drawn in index order from SplitMix64(seed).
std::vector<ManifestEntry> generate_dataset(const std::filesystem::path& out_dir, int w,
                                            int h, int n, int count, std::uint64_t seed);

struct LbriConfig {
    int width = 0;
    int height = 0;
    int blocks = 0;
};

// The large-instance grid: w in {50,100,500,1000}, h in {4,7,10}, and for
// each pair the h block counts w*h - h .. w*h - 1 (84 triples; at 100
// instances each, 8400 instances).
std::vector<LbriConfig> lbri_configs();

std::vector<ManifestEntry> generate_lbri(const std::filesystem::path& out_dir,
                                         int count_per_config = 100,
                                         std::uint64_t seed = 0);

}  // namespace brp

#endif
