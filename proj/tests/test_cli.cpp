#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_cli;
int g_run_counter = 0;

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliRun run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string tag =
        std::to_string(::getpid()) + "_" + std::to_string(g_run_counter++);
    const std::string out_path = "cli_stdout_" + tag + ".txt";
    const std::string err_path = "cli_stderr_" + tag + ".txt";
    const std::string cmd =
        env_prefix + (env_prefix.empty() ? "" : " ") + g_cli + " " + args + " > " + out_path +
        " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

// Splits a CSV artifact into header cells and data rows, skipping the
// leading "# key=value" metadata lines.
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            csv.header = split_cells(line);
            header_seen = true;
        } else {
            csv.rows.push_back(split_cells(line));
        }
    }
    return csv;
}

}  // namespace

TEST_CASE("extremal circle configuration artifact") {
    const CliRun r = run_cli("fekete --set circle:1 --m 4");
    REQUIRE(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.header ==
            std::vector<std::string>({"m", "point_index", "re", "im", "logdet"}));
    REQUIRE(csv.rows.size() == 4);
    for (const auto& row : csv.rows) {
        CHECK(row[0] == "4");
        CHECK(std::stod(row[4]) == std::log(16.0));
    }
}

TEST_CASE("point-mass lambda table") {
    const CliRun r = run_cli("laplace --experiment dirac-example --m-max 12");
    REQUIRE(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.header == std::vector<std::string>({"m", "lambda", "lambda_rotated"}));
    REQUIRE(csv.rows.size() == 12);
    for (const auto& row : csv.rows) {
        const int m = std::stoi(row[0]);
        const double lambda = std::stod(row[1]);
        if (m % 2 == 0)
            CHECK(std::abs(lambda - 1.0) < 1e-10);
        else if (m > 1)
            CHECK(lambda > 1.0);
        CHECK(std::stod(row[2]) == 1.0);
    }
}

TEST_CASE("interpolation error table stays under its bound column") {
    const CliRun r = run_cli("interp --g geometric:2 --m 8 --set disk:1");
    REQUIRE(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.header ==
            std::vector<std::string>({"m", "z_re", "z_im", "abs_err", "bound"}));
    REQUIRE(csv.rows.size() > 0);
    for (const auto& row : csv.rows)
        CHECK(std::stod(row[3]) <= std::stod(row[4]) + 1e-8);
}

TEST_CASE("config file entries override command-line flags") {
    const std::string cfg_path = "cli_cfg_" + std::to_string(::getpid()) + ".json";
    std::ofstream(cfg_path) << "{\"m-list\":[3]}";
    const CliRun r = run_cli("fekete --set circle:1 --m 5 --config " + cfg_path);
    std::remove(cfg_path.c_str());
    REQUIRE(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 3);
    for (const auto& row : csv.rows) CHECK(row[0] == "3");
}

TEST_CASE("config and usage failures exit with code 2") {
    const std::string cfg_path = "cli_bad_" + std::to_string(::getpid()) + ".json";
    std::ofstream(cfg_path) << "{\"bogus\":1}";
    const CliRun bad_key = run_cli("fekete --config " + cfg_path);
    std::remove(cfg_path.c_str());
    CHECK(bad_key.exit_code == 2);
    CHECK(bad_key.err.find("\"kind\":\"config\"") != std::string::npos);
    CHECK(bad_key.err.find("unknown config key") != std::string::npos);

    const CliRun bad_set = run_cli("fekete --set blob:1 --m 4");
    CHECK(bad_set.exit_code == 2);
    CHECK(bad_set.err.find("\"kind\":\"config\"") != std::string::npos);

    const CliRun bad_sub = run_cli("wibble");
    CHECK(bad_sub.exit_code == 2);

    const CliRun no_args = run_cli("");
    CHECK(no_args.exit_code == 2);
}

TEST_CASE("numerical failures exit with code 3 and a kind") {
    const CliRun r = run_cli("laplace --experiment chi-r --r-values 1.5 --m 8");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("\"kind\":\"domain\"") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("artifact written to a file matches the stdout artifact") {
    const CliRun direct = run_cli("bounds --m 4 --trials 3 --seed 7");
    REQUIRE(direct.exit_code == 0);
    const std::string out_path = "cli_artifact_" + std::to_string(::getpid()) + ".csv";
    const CliRun filed = run_cli("bounds --m 4 --trials 3 --seed 7 --out " + out_path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(out_path) == direct.out);
    std::remove(out_path.c_str());
}

TEST_CASE("json format emits the column-first object") {
    const CliRun r = run_cli("fekete --set circle:1 --m 4 --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("{\"columns\"", 0) == 0);
    CHECK(r.out.find("\"rows\"") != std::string::npos);
    CHECK(r.out.find("\"meta\"") != std::string::npos);
}

TEST_CASE("identical configurations reproduce artifacts byte for byte") {
    const std::string zeros_args = "zeros --m-list 5 --trials 2 --seed 11";
    const CliRun z1 = run_cli(zeros_args);
    const CliRun z2 = run_cli(zeros_args);
    REQUIRE(z1.exit_code == 0);
    CHECK(z1.out == z2.out);

    const std::string lap_args = "laplace --experiment boundedness --m 6 --trials 5 --seed 3";
    const CliRun l1 = run_cli(lap_args);
    const CliRun l2 = run_cli(lap_args);
    REQUIRE(l1.exit_code == 0);
    CHECK(l1.out == l2.out);
}

TEST_CASE("thread count does not change the artifact") {
    const std::string args = "fekete --set segment:-1,0,1,0 --m 12";
    const CliRun one = run_cli(args, "FPADE_THREADS=1");
    const CliRun four = run_cli(args, "FPADE_THREADS=4");
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(one.out == four.out);
    CHECK(!one.out.empty());
}

int main(int argc, char** argv) {
    std::vector<const char*> pass;
    pass.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (g_cli.empty() && !a.empty() && a[0] != '-') {
            g_cli = a;
            continue;
        }
        pass.push_back(argv[i]);
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli> [doctest args]\n");
        return 1;
    }
    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(pass.size()), pass.data());
    return ctx.run();
}
