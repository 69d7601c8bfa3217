#ifndef KNOTPACK_TOOLS_COMMANDS_HPP
#define KNOTPACK_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace knotpack::cli {

struct CommonOptions {
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int threads = 1;
};

struct AnalyzeOptions {
    CommonOptions common;
    std::string curve_path;
    std::string functionals = "diam,rmin";
    int quad_points = 8;
    int distortion_samples = 16;
};
int cmd_analyze(const AnalyzeOptions& opt);

struct ProbeOptions {
    CommonOptions common;
    std::string curve_path;
    int grid = 512;
    int distortion_samples = 16;
    int refine_iters = 40;
};
int cmd_probe(const ProbeOptions& opt);

struct OptimizeOptions {
    CommonOptions common;
    std::string curve_path;
    std::string objective = "rop";
    std::string functional = "diam";
    std::int64_t steps = 100000;
    int chains = 1;
    double temp0 = 0.0;
    double cooling = 0.995;
    double sigma = 0.02;
    std::int64_t renormalize_every = 0;
    std::string out_curve;  // default <out-dir>/optimized.json
    std::string trace_csv;  // default <out-dir>/trace.csv
    bool knot_level = false;
};
int cmd_optimize(const OptimizeOptions& opt);

struct ConvergeOptions {
    CommonOptions common;
    std::string curve_spec;
    std::string functional = "diam";
    std::string n_values;  // comma-separated, strictly increasing
    int quad_points = 8;
};
int cmd_converge(const ConvergeOptions& opt);

}  // namespace knotpack::cli

#endif  // KNOTPACK_TOOLS_COMMANDS_HPP
