#ifndef KNOTPACK_TOOLS_COMMON_HPP
#define KNOTPACK_TOOLS_COMMON_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "knotpack/errors.hpp"
#include "knotpack/version.hpp"
#include "commands.hpp"
#include "manifest.hpp"

namespace knotpack::cli {

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline std::string out_path(const CommonOptions& common, const std::string& file) {
    std::filesystem::create_directories(common.out_dir);
    return (std::filesystem::path(common.out_dir) / file).string();
}

inline void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write output file: " + path);
    out << content;
}

inline RunManifest make_manifest(const std::string& command, const CommonOptions& common,
                                 const std::string& input_path) {
    RunManifest m;
    m.command = command;
    m.seed = common.seed;
    m.version = kVersion;
    m.input_path = input_path;
    if (!input_path.empty()) m.input_hash = fnv1a64_file(input_path);
    m.timestamp_utc = now_utc_iso();
    m.flags["out-dir"] = common.out_dir;
    m.flags["seed"] = std::to_string(common.seed);
    m.flags["threads"] = std::to_string(common.threads);
    return m;
}

}  // namespace knotpack::cli

#endif  // KNOTPACK_TOOLS_COMMON_HPP
