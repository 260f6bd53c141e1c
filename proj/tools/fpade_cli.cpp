#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fpade/errors.hpp"
#include "fpade/io.hpp"
#include "fpade/runner.hpp"

int main(int argc, char** argv) {
    fpade::RunConfig cfg;
    std::string config_path;
    int m_single = 0;

    CLI::App app{"F-polynomial interpolation, capacity, and circle experiments"};
    app.add_option("subcommand", cfg.subcommand,
                   "one of: interp, bounds, fekete, capacity, zeros, laplace")
        ->required();
    app.add_option("--set", cfg.set_descriptor,
                   "compact set: circle:R, disk:R, segment:ax,ay,bx,by, square:S, or JSON");
    app.add_option("--F", cfg.f_label, "base function: exp, alt, osc:<omega>, custom:<path>");
    app.add_option("--g", cfg.g_descriptor,
                   "target: geometric:<R>, exp:<a>, monomial:<k>, poly:<c0>,<c1>,...");
    app.add_option("--experiment", cfg.experiment,
                   "laplace experiment: dirac-example, cosine, chi-r, boundedness");
    app.add_option("--table", cfg.table, "fekete table: points, vm, tau");
    app.add_option("--m", m_single, "single order m");
    app.add_option("--m-list", cfg.m_list, "explicit list of orders");
    app.add_option("--m-max", cfg.m_max, "sweep orders up to this value");
    app.add_option("--grid-n", cfg.grid_n, "boundary grid size (0 = max(512, 16 m))");
    app.add_option("--trials", cfg.trials, "random trials per cell (0 = subcommand default)");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--tol", cfg.tol, "evaluation tolerance");
    app.add_option("--interp-r", cfg.interp_r, "interp: comparison circle radius");
    app.add_option("--z-cap", cfg.interp_z_cap, "interp: |z| cap for probe points");
    app.add_option("--r-bound", cfg.zeros_r, "zeros: bound evaluation radius");
    app.add_option("--contour-radius", cfg.contour_radius, "zeros: counting contour radius");
    app.add_option("--r-values", cfg.r_values, "chi-r: list of r values");
    app.add_option("--out", cfg.output_path, "output file (default: stdout)");
    app.add_option("--format", cfg.format, "csv or json");
    app.add_option("--config", config_path, "JSON config file; entries override flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "{\"error\":{\"kind\":\"config\",\"message\":\""
                  << fpade::json_escape(e.what()) << "\"}}\n";
        return 2;
    }

    if (m_single > 0 && cfg.m_list.empty()) cfg.m_list = {m_single};
    if (!config_path.empty()) {
        try {
            fpade::apply_config_json(cfg, fpade::read_text_file(config_path));
        } catch (const fpade::Error& e) {
            std::cerr << "{\"error\":{\"kind\":\"config\",\"message\":\""
                      << fpade::json_escape(e.what()) << "\"}}\n";
            return 2;
        }
    }

    const fpade::RunResult res = fpade::run(cfg);
    if (res.exit_code == 0) {
        if (cfg.output_path.empty()) std::cout << res.artifact;
    } else {
        std::cerr << res.error_json;
    }
    return res.exit_code;
}
