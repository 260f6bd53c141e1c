#ifndef FPADE_RUNNER_HPP
#define FPADE_RUNNER_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fpade {

// A fully resolved experiment request.  The CLI fills this from flags and an
// optional JSON config file; tests construct it directly so artifacts can be
// byte-compared without spawning a process.
struct RunConfig {
    std::string subcommand;                  // interp|bounds|fekete|capacity|zeros|laplace
    std::string set_descriptor = "circle:1";
    std::string f_label = "exp";
    std::string g_descriptor = "geometric:2";
    std::string experiment = "dirac-example";  // laplace: dirac-example|cosine|chi-r|boundedness
    std::string table = "points";            // fekete: points|vm|tau
    std::vector<int> m_list;                 // empty = subcommand default
    int m_max = 0;                           // 0 = subcommand default
    int grid_n = 0;                          // 0 = max(512, 16 m)
    int trials = 0;                          // 0 = subcommand default
    std::uint64_t seed = 2026;
    double tol = 1e-12;
    double interp_r = 1.5;                   // interp: comparison circle radius
    double interp_z_cap = 0.6;               // interp: |z| cap for probe points
    double zeros_r = 3.0;                    // zeros: bound evaluation radius
    double contour_radius = 1.0 + 1e-6;      // zeros: counting contour
    std::vector<double> r_values;            // chi-r: empty = {0.9, 0.99, 0.999}
    std::string output_path;                 // empty = artifact returned only
    std::string format = "csv";              // csv|json
};

// Overrides fields of cfg from a JSON object whose keys mirror the CLI flag
// names (config wins over flags).  Throws ConfigError on unknown keys or
// ill-typed values.
void apply_config_json(RunConfig& cfg, const std::string& json_text);

struct RunResult {
    int exit_code = 0;         // 0 ok, 2 config error, 3 numerical error
    std::string artifact;      // table serialized per cfg.format
    std::string error_json;    // non-empty on failure: {"error":{...}}
};

// Executes the experiment, writes the artifact to cfg.output_path when set,
// and never throws: failures are folded into exit_code / error_json.
RunResult run(const RunConfig& cfg);

}  // namespace fpade

#endif
