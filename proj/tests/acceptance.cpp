// Acceptance gate: one self-contained check per promised behavior, each
// printing exactly one PASS/FAIL line.  The process exit code is the number
// of failed checks.  argv[1] must point at the command-line binary (used by
// the artifact-determinism check).

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fpade/capacity.hpp"
#include "fpade/compact_set.hpp"
#include "fpade/interpolation.hpp"
#include "fpade/laplace.hpp"
#include "fpade/series.hpp"
#include "fpade/vandermonde.hpp"
#include "fpade/zeros.hpp"
#include "oracles.hpp"

using fpade::CompactSet;
using fpade::Cplx;
using fpade::EntireFunction;
using fpade::FPolynomial;
using fpade::FrequencyTuple;
using fpade::HoloFunction;
using fpade::SpectralMeasure;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string g_cli;

struct Outcome {
    bool pass = false;
    std::string detail;
};

FrequencyTuple roots_of_unity(int m, double radius = 1.0) {
    std::vector<Cplx> pts;
    for (int j = 0; j < m; ++j) pts.push_back(std::polar(radius, 2.0 * kPi * j / m));
    return FrequencyTuple(std::move(pts));
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// ---------------------------------------------------------------------------

Outcome interp_error_within_bound() {
    const auto t0 = std::chrono::steady_clock::now();
    const HoloFunction g = HoloFunction::geometric(2.0);
    const EntireFunction F = EntireFunction::exp_function();
    std::mt19937_64 rng(401);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int cases = 0;
    for (int m : {4, 8, 12}) {
        for (int tuple = 0; tuple < 20; ++tuple) {
            const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
            const FPolynomial f = fpade::interpolate(g, F, q);
            for (int probe = 0; probe < 5; ++probe) {
                const Cplx z = std::polar(0.6 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
                const double err = std::abs(g.evaluate(z) - f.evaluate(z));
                const double bound = fpade::error_bound(g, q, F, z, 1.5);
                ++cases;
                if (!(err <= bound + 1e-8))
                    return {false, "error " + fmt(err) + " above bound " + fmt(bound) +
                                       " at m=" + std::to_string(m)};
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 10.0) return {false, "took " + fmt(secs) + "s (budget 10s)"};
    return {true, std::to_string(cases) + " probe cases, " + fmt(secs) + "s"};
}

Outcome witness_and_extremal_norm_brackets() {
    const EntireFunction F = EntireFunction::exp_function();
    std::mt19937_64 rng(409);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 11);
        const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
        const fpade::TqBounds b = fpade::operator_bounds(F, q);
        const double lw =
            std::log(fpade::interpolate(HoloFunction::monomial(m - 1), F, q).norm_inf());
        if (!(lw >= b.t.log_lo - 1.1e-9 && lw <= b.t.log_hi + 1.1e-9))
            return {false, "operator witness outside bracket at m=" + std::to_string(m)};
        const double ls = std::log(fpade::extremal_sup_norm(F, q, 1.0, 4096, 1.0));
        if (!(ls <= b.eps.log_hi + std::log1p(1e-6)))
            return {false, "extremal sup above upper bound at m=" + std::to_string(m)};
    }
    return {true, "50 random tuples, m in 2..12"};
}

Outcome closed_form_inverse_residual() {
    std::mt19937_64 rng(419);
    double worst_residual = 0.0;
    double worst_entry = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 11);
        const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
        const fpade::ComplexMatrix a = fpade::vandermonde_matrix(q);
        const fpade::ComplexMatrix inv = fpade::vdm_inverse(q).inv;
        const double res =
            fpade::max_abs_diff(a * inv, fpade::ComplexMatrix::identity(m));
        worst_residual = std::max(worst_residual, res);
        if (res >= 1e-9) return {false, "identity residual " + fmt(res)};
        const fpade::ComplexMatrix ref = oracles::gauss_inverse(a);
        double scale = 0.0;
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) scale = std::max(scale, std::abs(ref(i, k)));
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                const double d = std::abs(inv(i, k) - ref(i, k)) / scale;
                worst_entry = std::max(worst_entry, d);
                if (d >= 1e-9)
                    return {false, "formula vs elimination entry deviation " + fmt(d)};
            }
    }
    return {true, "100 tuples; worst residual " + fmt(worst_residual) + ", worst entry dev " +
                      fmt(worst_entry)};
}

Outcome ratio_determinants_match_tableaux() {
    std::mt19937_64 rng(421);
    for (int m = 1; m <= 6; ++m) {
        const FrequencyTuple q(oracles::random_points(m, 0.3, rng));
        for (int j = 0; j < m; ++j) {
            for (int k = m - 1; k <= m + 4; ++k) {
                if (j < m - 1 && k == m - 1) continue;
                if (k == m - 1) {
                    if (fpade::schur_term_count(m, j, k) != 1)
                        return {false, "degenerate count not 1"};
                    continue;
                }
                const oracles::TableauSum t =
                    oracles::hook_schur(q.points(), k - m, m - 1 - j);
                const double rd =
                    oracles::rel_diff(fpade::schur_ratio(q, j, k).value(), t.sum);
                if (rd >= 1e-10)
                    return {false, "value deviation " + fmt(rd) + " at (m,j,k)=(" +
                                       std::to_string(m) + "," + std::to_string(j) + "," +
                                       std::to_string(k) + ")"};
                if (fpade::schur_term_count(m, j, k) != t.count)
                    return {false, "term count mismatch at (m,j,k)=(" + std::to_string(m) +
                                       "," + std::to_string(j) + "," + std::to_string(k) + ")"};
                if (j == m - 1 &&
                    fpade::schur_term_count(m, j, k) != oracles::binomial(k, m - 1))
                    return {false, "top-row count differs from binomial"};
            }
        }
    }
    return {true, "all m <= 6, k <= m+4 against tableau enumeration"};
}

Outcome circle_normalized_limit_endpoints() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<fpade::CapacityRow> rows = fpade::capacity_limits(
        CompactSet::parse("circle:1"), EntireFunction::exp_function(), 200);
    const fpade::CapacityRow& last = rows.back();
    const double e = std::exp(1.0);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (last.m != 200) return {false, "last row is not m=200"};
    const double dev_low = std::abs(last.norm_low - e) / e;
    const double dev_high = std::abs(last.norm_high - e) / e;
    if (dev_low >= 0.05) return {false, "lower endpoint off by " + fmt(dev_low)};
    if (dev_high >= 0.05) return {false, "upper endpoint off by " + fmt(dev_high)};
    if (secs >= 5.0) return {false, "took " + fmt(secs) + "s (budget 5s)"};
    return {true, "m=200: low dev " + fmt(dev_low) + ", high dev " + fmt(dev_high) + ", " +
                      fmt(secs) + "s"};
}

Outcome diameter_second_difference() {
    const std::vector<fpade::VmRow> circ =
        fpade::vm_sequence(CompactSet::parse("circle:1"), 40);
    const double dc = circ.back().d_estimate;
    if (!(std::abs(dc - 1.0) < 0.05))
        return {false, "circle estimate " + fmt(dc) + " not within 5% of 1"};
    const std::vector<fpade::VmRow> seg =
        fpade::vm_sequence(CompactSet::parse("segment:-1,0,1,0"), 40, 2048);
    const double ds = seg.back().d_estimate;
    if (!(std::abs(ds - 0.5) < 0.04))
        return {false, "segment estimate " + fmt(ds) + " not within 8% of 0.5"};
    return {true, "circle " + fmt(dc) + ", segment " + fmt(ds)};
}

Outcome equilibrium_moments() {
    for (int m : {8, 16}) {
        const std::vector<Cplx> mom = fpade::empirical_moments(roots_of_unity(m), m - 1);
        for (int n = 1; n < m; ++n)
            if (!(std::abs(mom[static_cast<size_t>(n) - 1]) <= 1e-12))
                return {false, "symmetric-node moment " + std::to_string(n) +
                                   " is " + fmt(std::abs(mom[static_cast<size_t>(n) - 1]))};
    }
    const fpade::FeketeResult fk =
        fpade::fekete_search(CompactSet::parse("segment:-1,0,1,0"), 60);
    const std::vector<Cplx> mom =
        fpade::empirical_moments(FrequencyTuple(fk.points), 8);
    for (int n = 2; n <= 8; n += 2) {
        const double dev =
            std::abs(mom[static_cast<size_t>(n) - 1].real() - fpade::arcsine_moment(n));
        if (!(dev < 0.05))
            return {false, "segment moment " + std::to_string(n) + " off by " + fmt(dev)};
    }
    return {true, "symmetric nodes to 1e-12; segment m=60 evens within 0.05"};
}

Outcome zero_count_growth() {
    const std::vector<fpade::NmRow> rows =
        fpade::zero_growth(CompactSet::parse("circle:1"), EntireFunction::exp_function(),
                           {5, 10, 20});
    double prev_ratio = 1e300;
    for (const fpade::NmRow& r : rows) {
        if (r.failed_trials != 0)
            return {false, std::to_string(r.failed_trials) + " failed trials at m=" +
                               std::to_string(r.m)};
        if (r.max_count < r.m - 1)
            return {false, "count " + std::to_string(r.max_count) + " below m-1 at m=" +
                               std::to_string(r.m)};
        if (!(r.ratio < 1.0))
            return {false, "ratio " + fmt(r.ratio) + " not below 1 at m=" +
                               std::to_string(r.m)};
        if (!(r.ratio <= prev_ratio + 1e-12))
            return {false, "ratio increased at m=" + std::to_string(r.m)};
        prev_ratio = r.ratio;
    }
    return {true, "m=5,10,20: counts >= m-1, ratios decreasing"};
}

Outcome unit_mass_interpolant_boundedness() {
    const EntireFunction F = EntireFunction::exp_function();
    std::mt19937_64 rng(433);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 11);
        const int atoms = 1 + static_cast<int>(rng() % 5);
        std::vector<Cplx> locs, masses;
        std::vector<double> raw;
        double total = 0.0;
        for (int a = 0; a < atoms; ++a) {
            locs.push_back(std::polar(1.0, 2.0 * kPi * unit(rng)));
            raw.push_back(0.05 + unit(rng));
            total += raw.back();
        }
        for (int a = 0; a < atoms; ++a)
            masses.push_back(
                std::polar(raw[static_cast<size_t>(a)] / total, 2.0 * kPi * unit(rng)));
        const SpectralMeasure mu = SpectralMeasure::atomic(locs, masses);
        const FrequencyTuple nodes = roots_of_unity(m);
        const FPolynomial f = fpade::interpolate_laplace(mu, F, nodes);
        if (!(f.norm_inf() <= 1.0 + 1e-9))
            return {false, "coefficient norm " + fmt(f.norm_inf()) + " above 1 at m=" +
                               std::to_string(m)};
        const FPolynomial via_jet =
            fpade::interpolate(fpade::laplace_holo(mu, F), F, nodes);
        for (int j = 0; j < m; ++j) {
            const double d = std::abs(f.coefficients()[static_cast<size_t>(j)] -
                                      via_jet.coefficients()[static_cast<size_t>(j)]);
            if (!(d < 1e-8))
                return {false, "measure/jet coefficient gap " + fmt(d) + " at m=" +
                                   std::to_string(m)};
        }
    }
    return {true, "50 random unit-mass measures, m in 2..12"};
}

Outcome point_mass_lambda_table() {
    for (int k = 1; k <= 50; ++k) {
        const double d = std::abs(fpade::dirac_lambda(2 * k) - 1.0);
        if (!(d <= 1e-10))
            return {false, "even-node lambda off by " + fmt(d) + " at m=" +
                               std::to_string(2 * k)};
    }
    for (int m = 1; m <= 101; ++m) {
        const double d = std::abs(fpade::dirac_lambda_rotated(m) - 1.0);
        if (!(d <= 1e-10))
            return {false, "negated-node lambda off by " + fmt(d) + " at m=" +
                               std::to_string(m)};
    }
    const double l11 = fpade::dirac_lambda(11);
    const double l101 = fpade::dirac_lambda(101);
    const double l1001 = fpade::dirac_lambda(1001);
    if (!(l11 < l101 && l101 < l1001))
        return {false, "odd-node lambda not increasing: " + fmt(l11) + ", " + fmt(l101) +
                           ", " + fmt(l1001)};
    if (!(l1001 > 2.0 * l11))
        return {false, "lambda(1001) = " + fmt(l1001) + " not above twice lambda(11)"};
    return {true, "even/negated exact; odd growth " + fmt(l11) + " -> " + fmt(l1001)};
}

Outcome density_lambda_limits() {
    const SpectralMeasure cosd =
        SpectralMeasure::circle_density({{-1, Cplx(0.5, 0.0)}, {1, Cplx(0.5, 0.0)}});
    const std::vector<fpade::LambdaRow> rows = fpade::lambda_limit_abs(cosd, {64});
    const double dcos = std::abs(rows[0].lambda - kPi);
    if (!(dcos < 1e-6)) return {false, "cosine lambda off pi by " + fmt(dcos)};

    const fpade::ChiRResult r09 = fpade::chi_r_family(0.9, 64);
    const fpade::ChiRResult r099 = fpade::chi_r_family(0.99, 64);
    const fpade::ChiRResult r0999 = fpade::chi_r_family(0.999, 64);
    if (!r09.quadrature_converged || !r099.quadrature_converged ||
        !r0999.quadrature_converged)
        return {false, "peaked-family quadrature did not converge"};
    const double d09 = std::abs(r09.l1_chi - 4.0 * kPi);
    const double d099 = std::abs(r099.l1_chi - 4.0 * kPi);
    if (!(d09 < 1e-3)) return {false, "l1 at r=0.9 off 4pi by " + fmt(d09)};
    if (!(d099 < 1e-3)) return {false, "l1 at r=0.99 off 4pi by " + fmt(d099)};
    const double growth = r0999.l1_chi_minus / r09.l1_chi_minus;
    if (!(growth >= 1.5))
        return {false, "half-spectrum growth factor " + fmt(growth) + " below 1.5"};
    return {true, "cosine dev " + fmt(dcos) + "; half-spectrum growth " + fmt(growth)};
}

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string out_path = "acc_out_" + std::to_string(::getpid()) + "_" +
                                 std::to_string(counter++) + ".txt";
    const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + g_cli + " " +
                            args + " > " + out_path + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(out_path.c_str());
    return r;
}

Outcome artifact_byte_determinism() {
    if (g_cli.empty()) return {false, "no CLI path given (argv[1])"};
    const std::vector<std::string> commands = {
        "bounds --m 6 --trials 4 --seed 13",
        "zeros --m-list 8 --trials 2 --seed 5",
        "laplace --experiment chi-r --r-values 0.9 --m 16",
    };
    for (const std::string& c : commands) {
        const CliRun a = run_cli(c);
        const CliRun b = run_cli(c);
        if (a.exit_code != 0 || b.exit_code != 0)
            return {false, "nonzero exit for '" + c + "'"};
        if (a.out != b.out) return {false, "artifacts differ for '" + c + "'"};
        if (a.out.empty()) return {false, "empty artifact for '" + c + "'"};
    }
    const std::string threaded = "fekete --set segment:-1,0,1,0 --m 16";
    const CliRun one = run_cli(threaded, "FPADE_THREADS=1");
    const CliRun three = run_cli(threaded, "FPADE_THREADS=3");
    if (one.exit_code != 0 || three.exit_code != 0)
        return {false, "nonzero exit for threaded run"};
    if (one.out != three.out) return {false, "artifact depends on thread count"};
    return {true, "3 command pairs + thread-count variation"};
}

// ---------------------------------------------------------------------------

int run_all() {
    struct Check {
        const char* name;
        std::function<Outcome()> fn;
    };
    const std::vector<Check> checks = {
        {"interp-error-within-bound", interp_error_within_bound},
        {"witness-and-extremal-norm-brackets", witness_and_extremal_norm_brackets},
        {"closed-form-inverse-residual", closed_form_inverse_residual},
        {"ratio-determinants-match-tableaux", ratio_determinants_match_tableaux},
        {"circle-normalized-limit-endpoints", circle_normalized_limit_endpoints},
        {"diameter-second-difference", diameter_second_difference},
        {"equilibrium-moments", equilibrium_moments},
        {"zero-count-growth", zero_count_growth},
        {"unit-mass-interpolant-boundedness", unit_mass_interpolant_boundedness},
        {"point-mass-lambda-table", point_mass_lambda_table},
        {"density-lambda-limits", density_lambda_limits},
        {"artifact-byte-determinism", artifact_byte_determinism},
    };
    int failures = 0;
    for (const Check& c : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %-38s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", c.name, secs,
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    const int failures = run_all();
    if (failures == 0)
        std::printf("all %d checks passed\n", 12);
    else
        std::printf("%d of 12 checks FAILED\n", failures);
    return failures;
}
