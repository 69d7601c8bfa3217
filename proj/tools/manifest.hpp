#ifndef KNOTPACK_TOOLS_MANIFEST_HPP
#define KNOTPACK_TOOLS_MANIFEST_HPP

#include <cstdint>
#include <map>
#include <string>

namespace knotpack::cli {

// Reproducibility record accompanying every output file set. The timestamp
// is the only field that varies between identical invocations; all data
// payloads (CSV, curve JSON, summaries) are byte-identical given the same
// seed and flags.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> flags;
    std::uint64_t seed = 0;
    std::string version;
    std::string input_path;
    std::string input_hash;  // FNV-1a 64-bit of the input file bytes, hex
    std::string timestamp_utc;

    std::string to_json() const;
    void write(const std::string& path) const;
};

// FNV-1a 64-bit hash of a file's bytes, as 16 hex digits.
std::string fnv1a64_file(const std::string& path);

std::string now_utc_iso();

}  // namespace knotpack::cli

#endif  // KNOTPACK_TOOLS_MANIFEST_HPP
