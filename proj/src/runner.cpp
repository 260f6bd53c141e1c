#include "fpade/runner.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "fpade/capacity.hpp"
#include "fpade/compact_set.hpp"
#include "fpade/errors.hpp"
#include "fpade/interpolation.hpp"
#include "fpade/io.hpp"
#include "fpade/laplace.hpp"
#include "fpade/series.hpp"
#include "fpade/zeros.hpp"

namespace fpade {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

int as_int(const nlohmann::json& v, const std::string& key) {
    if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
    return v.get<int>();
}

double as_double(const nlohmann::json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
}

std::string as_string(const nlohmann::json& v, const std::string& key) {
    if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
    return v.get<std::string>();
}

// Random tuple on the boundary of the set: uniform angles with an angular
// gap floor for circles, the separated disk sampler otherwise.
FrequencyTuple sample_tuple(const CompactSet& set, int m, std::mt19937_64& rng) {
    if (!set.is_circular())
        return random_separated_tuple(m, 0.25 * set.enclosing_radius(), rng,
                                      set.enclosing_radius());
    const double radius = set.circle_radius();
    if (m == 1) {
        const double t = kTwoPi * uniform01(rng);
        return FrequencyTuple({radius * Cplx(std::cos(t), std::sin(t))});
    }
    const double min_gap = 3.14159265358979323846 / (2.0 * m);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<double> ang(static_cast<size_t>(m));
        for (double& a : ang) a = kTwoPi * uniform01(rng);
        std::sort(ang.begin(), ang.end());
        double gap = ang[0] + kTwoPi - ang.back();
        for (size_t i = 1; i < ang.size(); ++i) gap = std::min(gap, ang[i] - ang[i - 1]);
        if (gap < min_gap) continue;
        std::vector<Cplx> pts;
        pts.reserve(ang.size());
        for (double a : ang) pts.push_back(radius * Cplx(std::cos(a), std::sin(a)));
        return FrequencyTuple(pts);
    }
    throw NonConvergent("could not sample a separated circle tuple");
}

std::vector<int> resolve_m_list(const RunConfig& cfg, std::vector<int> fallback) {
    if (!cfg.m_list.empty()) return cfg.m_list;
    if (cfg.m_max > 0) {
        std::vector<int> out;
        for (int m = 2; m <= cfg.m_max; ++m) out.push_back(m);
        return out;
    }
    return fallback;
}

void stamp_common(Table& t, const RunConfig& cfg) {
    t.set_meta("seed", fmt_int(static_cast<long long>(cfg.seed)));
    t.set_meta("set", cfg.set_descriptor);
}

Table run_interp(const RunConfig& cfg) {
    const CompactSet set = CompactSet::parse(cfg.set_descriptor);
    const EntireFunction f_base = EntireFunction::parse(cfg.f_label);
    const HoloFunction g = HoloFunction::parse(cfg.g_descriptor);
    const std::vector<int> m_list = resolve_m_list(cfg, {4, 8, 12});
    std::mt19937_64 rng(cfg.seed);
    Table t({"m", "z_re", "z_im", "abs_err", "bound"});
    stamp_common(t, cfg);
    t.set_meta("F", f_base.name());
    t.set_meta("g", g.name());
    t.set_meta("r", fmt_double(cfg.interp_r));
    for (int m : m_list) {
        const FrequencyTuple q = sample_tuple(set, m, rng);
        const FPolynomial f = interpolate(g, f_base, q);
        for (int probe = 0; probe < 10; ++probe) {
            const double rad = cfg.interp_z_cap * std::sqrt(uniform01(rng));
            const double ang = kTwoPi * uniform01(rng);
            const Cplx z = rad * Cplx(std::cos(ang), std::sin(ang));
            const double err = std::abs(g.evaluate(z) - f.evaluate(z, cfg.tol));
            const double bound = error_bound(g, q, f_base, z, cfg.interp_r);
            t.add_row({fmt_int(m), fmt_double(z.real()), fmt_double(z.imag()),
                       fmt_double(err), fmt_double(bound)});
        }
    }
    return t;
}

Table run_bounds(const RunConfig& cfg) {
    const CompactSet set = CompactSet::parse(cfg.set_descriptor);
    const EntireFunction f_base = EntireFunction::parse(cfg.f_label);
    const std::vector<int> m_list = resolve_m_list(cfg, {4, 8, 12});
    const int trials = cfg.trials > 0 ? cfg.trials : 5;
    std::mt19937_64 rng(cfg.seed);
    Table t({"m", "trial", "log_gamma", "log_t_low", "log_witness", "log_t_high",
             "log_eps_low", "log_eps_high", "in_bracket"});
    stamp_common(t, cfg);
    t.set_meta("F", f_base.name());
    for (int m : m_list) {
        for (int trial = 0; trial < trials; ++trial) {
            const FrequencyTuple q = sample_tuple(set, m, rng);
            const TqBounds b = operator_bounds(f_base, q);
            const GammaProfile gp = gamma_profile(q);
            // The witness norm: interpolating z^{m-1} gives coefficients
            // (m-1)! v_{i,m} / F_{m-1} whose largest magnitude is
            // (m-1)! / (gamma(q) |F_{m-1}|).
            const double log_w = std::lgamma(static_cast<double>(m)) - gp.log_gamma_min -
                                 std::log(std::abs(f_base.coeff(m - 1)));
            const bool inside = log_w >= b.t.log_lo - 1e-9 && log_w <= b.t.log_hi + 1e-9;
            t.add_row({fmt_int(m), fmt_int(trial), fmt_double(gp.log_gamma_min),
                       fmt_double(b.t.log_lo), fmt_double(log_w), fmt_double(b.t.log_hi),
                       fmt_double(b.eps.log_lo), fmt_double(b.eps.log_hi),
                       fmt_int(inside ? 1 : 0)});
        }
    }
    return t;
}

Table run_fekete(const RunConfig& cfg) {
    const CompactSet set = CompactSet::parse(cfg.set_descriptor);
    if (cfg.table == "points") {
        const std::vector<int> m_list = resolve_m_list(cfg, {4});
        Table t({"m", "point_index", "re", "im", "logdet"});
        stamp_common(t, cfg);
        for (int m : m_list) {
            const FeketeResult fr = fekete_search(set, m, cfg.grid_n, cfg.seed);
            for (size_t idx = 0; idx < fr.points.size(); ++idx)
                t.add_row({fmt_int(m), fmt_int(static_cast<long long>(idx)),
                           fmt_double(fr.points[idx].real()),
                           fmt_double(fr.points[idx].imag()), fmt_double(fr.log_vm)});
        }
        return t;
    }
    if (cfg.table == "vm") {
        const int m_max = cfg.m_max > 0 ? cfg.m_max : 40;
        Table t({"m", "log_vm", "raw_estimate", "d_estimate"});
        stamp_common(t, cfg);
        for (const VmRow& row : vm_sequence(set, m_max, cfg.grid_n))
            t.add_row({fmt_int(row.m), fmt_double(row.log_vm), fmt_double(row.raw_estimate),
                       fmt_double(row.d_estimate)});
        return t;
    }
    if (cfg.table == "tau") {
        const std::vector<int> m_list = resolve_m_list(cfg, {4, 8, 16});
        Table t({"m", "tau_low", "tau_high", "direct_upper"});
        stamp_common(t, cfg);
        for (int m : m_list) {
            const ChebyshevBracket b = chebyshev_bracket(set, m, cfg.grid_n);
            t.add_row({fmt_int(b.m), fmt_double(b.tau_low), fmt_double(b.tau_high),
                       fmt_double(b.direct_upper)});
        }
        return t;
    }
    throw ConfigError("unknown fekete table: " + cfg.table);
}

Table run_capacity(const RunConfig& cfg) {
    const CompactSet set = CompactSet::parse(cfg.set_descriptor);
    const EntireFunction f_base = EntireFunction::parse(cfg.f_label);
    const int m_max = cfg.m_max > 0 ? cfg.m_max : 60;
    Table t({"m", "log_eps_low", "log_eps_high", "norm_low", "norm_high", "log_t_low",
             "log_t_high", "product_low", "product_high"});
    stamp_common(t, cfg);
    t.set_meta("F", f_base.name());
    for (const CapacityRow& row : capacity_limits(set, f_base, m_max, cfg.grid_n))
        t.add_row({fmt_int(row.m), fmt_double(row.log_eps_low), fmt_double(row.log_eps_high),
                   fmt_double(row.norm_low), fmt_double(row.norm_high),
                   fmt_double(row.log_t_low), fmt_double(row.log_t_high),
                   fmt_double(row.product_low), fmt_double(row.product_high)});
    return t;
}

Table run_zeros(const RunConfig& cfg) {
    const CompactSet set = CompactSet::parse(cfg.set_descriptor);
    const EntireFunction f_base = EntireFunction::parse(cfg.f_label);
    const std::vector<int> m_list = resolve_m_list(cfg, {5, 10, 20});
    const int trials = cfg.trials > 0 ? cfg.trials : 3;
    Table t({"m", "count", "bound_at_r", "ratio"});
    stamp_common(t, cfg);
    t.set_meta("F", f_base.name());
    t.set_meta("r", fmt_double(cfg.zeros_r));
    t.set_meta("contour_radius", fmt_double(cfg.contour_radius));
    for (const NmRow& row : zero_growth(set, f_base, m_list, trials, cfg.seed, cfg.zeros_r,
                                        cfg.contour_radius, cfg.grid_n)) {
        if (row.max_count < 0)
            t.add_row({fmt_int(row.m), "", fmt_double(row.bound), ""});
        else
            t.add_row({fmt_int(row.m), fmt_int(row.max_count), fmt_double(row.bound),
                       fmt_double(row.ratio)});
    }
    return t;
}

Table run_laplace(const RunConfig& cfg) {
    const std::string& exp = cfg.experiment;
    if (exp == "dirac-example" || exp == "dirac") {
        const int m_max = cfg.m_max > 0 ? cfg.m_max : 101;
        Table t({"m", "lambda", "lambda_rotated"});
        stamp_common(t, cfg);
        t.set_meta("experiment", "dirac-example");
        for (int m = 1; m <= m_max; ++m)
            t.add_row({fmt_int(m), fmt_double(dirac_lambda(m)),
                       fmt_double(dirac_lambda_rotated(m))});
        return t;
    }
    if (exp == "cosine") {
        const std::vector<int> m_list =
            cfg.m_list.empty() ? std::vector<int>{2, 4, 8, 16, 32, 64} : cfg.m_list;
        const SpectralMeasure chi = SpectralMeasure::circle_density(
            {{-1, Cplx(0.5, 0.0)}, {1, Cplx(0.5, 0.0)}});
        Table t({"m", "lambda", "limit", "abs_diff"});
        stamp_common(t, cfg);
        t.set_meta("experiment", "cosine");
        for (const LambdaRow& row : lambda_limit_abs(chi, m_list))
            t.add_row({fmt_int(row.m), fmt_double(row.lambda), fmt_double(row.limit),
                       fmt_double(row.abs_diff)});
        return t;
    }
    if (exp == "chi-r") {
        const std::vector<double> r_values =
            cfg.r_values.empty() ? std::vector<double>{0.9, 0.99, 0.999} : cfg.r_values;
        const int m = cfg.m_list.empty() ? 64 : cfg.m_list.front();
        Table t({"r", "m", "lambda", "l1_chi", "l1_chi_minus", "converged"});
        stamp_common(t, cfg);
        t.set_meta("experiment", "chi-r");
        for (double r : r_values) {
            const ChiRResult res = chi_r_family(r, m);
            t.add_row({fmt_double(res.r), fmt_int(res.m), fmt_double(res.lambda),
                       fmt_double(res.l1_chi), fmt_double(res.l1_chi_minus),
                       fmt_int(res.quadrature_converged ? 1 : 0)});
        }
        return t;
    }
    if (exp == "boundedness") {
        const EntireFunction f_base = EntireFunction::parse(cfg.f_label);
        const int m = cfg.m_list.empty() ? 8 : cfg.m_list.front();
        const int trials = cfg.trials > 0 ? cfg.trials : 50;
        const FrequencyTuple nodes = FrequencyTuple::roots_of_unity(m);
        std::mt19937_64 rng(cfg.seed);
        Table t({"trial", "m", "norm_inf", "total_variation"});
        stamp_common(t, cfg);
        t.set_meta("experiment", "boundedness");
        t.set_meta("F", f_base.name());
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<Cplx> locs(static_cast<size_t>(m));
            std::vector<double> weights(static_cast<size_t>(m));
            double total = 0.0;
            for (int i = 0; i < m; ++i) {
                const double a = kTwoPi * uniform01(rng);
                locs[static_cast<size_t>(i)] = Cplx(std::cos(a), std::sin(a));
                weights[static_cast<size_t>(i)] = uniform01(rng) + 1e-3;
                total += weights[static_cast<size_t>(i)];
            }
            std::vector<Cplx> masses(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) {
                const double phase = kTwoPi * uniform01(rng);
                masses[static_cast<size_t>(i)] =
                    weights[static_cast<size_t>(i)] / total * Cplx(std::cos(phase), std::sin(phase));
            }
            const SpectralMeasure mu = SpectralMeasure::atomic(locs, masses);
            const FPolynomial f = interpolate_laplace(mu, f_base, nodes);
            t.add_row({fmt_int(trial), fmt_int(m), fmt_double(f.norm_inf()),
                       fmt_double(mu.total_variation())});
        }
        return t;
    }
    throw ConfigError("unknown laplace experiment: " + exp);
}

std::string classify(const Error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return "config";
    if (dynamic_cast<const BoundViolation*>(&e)) return "bound-violation";
    if (dynamic_cast<const GridTooCoarse*>(&e)) return "grid-too-coarse";
    if (dynamic_cast<const ContourThroughZero*>(&e)) return "contour-through-zero";
    if (dynamic_cast<const QuadratureNonConvergent*>(&e)) return "quadrature-non-convergent";
    if (dynamic_cast<const NonConvergent*>(&e)) return "non-convergent";
    if (dynamic_cast<const AbsHypothesisViolated*>(&e)) return "abs-hypothesis";
    if (dynamic_cast<const OverflowError*>(&e)) return "overflow";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    return "error";
}

std::string error_payload(const std::string& kind, const std::string& message) {
    return "{\"error\":{\"kind\":\"" + json_escape(kind) + "\",\"message\":\"" +
           json_escape(message) + "\"}}\n";
}

}  // namespace

void apply_config_json(RunConfig& cfg, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        const nlohmann::json& v = item.value();
        if (key == "subcommand") {
            cfg.subcommand = as_string(v, key);
        } else if (key == "set") {
            cfg.set_descriptor = as_string(v, key);
        } else if (key == "F") {
            cfg.f_label = as_string(v, key);
        } else if (key == "g") {
            cfg.g_descriptor = as_string(v, key);
        } else if (key == "experiment") {
            cfg.experiment = as_string(v, key);
        } else if (key == "table") {
            cfg.table = as_string(v, key);
        } else if (key == "m") {
            cfg.m_list = {as_int(v, key)};
        } else if (key == "m-list") {
            if (!v.is_array()) throw ConfigError("config key 'm-list' must be an array");
            cfg.m_list.clear();
            for (const auto& e : v) cfg.m_list.push_back(as_int(e, key));
        } else if (key == "m-max") {
            cfg.m_max = as_int(v, key);
        } else if (key == "grid-n") {
            cfg.grid_n = as_int(v, key);
        } else if (key == "trials") {
            cfg.trials = as_int(v, key);
        } else if (key == "seed") {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw ConfigError("config key 'seed' must be a nonnegative integer");
            cfg.seed = v.get<std::uint64_t>();
        } else if (key == "tol") {
            cfg.tol = as_double(v, key);
        } else if (key == "interp-r") {
            cfg.interp_r = as_double(v, key);
        } else if (key == "z-cap") {
            cfg.interp_z_cap = as_double(v, key);
        } else if (key == "r-bound") {
            cfg.zeros_r = as_double(v, key);
        } else if (key == "contour-radius") {
            cfg.contour_radius = as_double(v, key);
        } else if (key == "r-values") {
            if (!v.is_array()) throw ConfigError("config key 'r-values' must be an array");
            cfg.r_values.clear();
            for (const auto& e : v) cfg.r_values.push_back(as_double(e, key));
        } else if (key == "out") {
            cfg.output_path = as_string(v, key);
        } else if (key == "format") {
            cfg.format = as_string(v, key);
        } else {
            throw ConfigError("unknown config key: " + key);
        }
    }
}

RunResult run(const RunConfig& cfg) {
    RunResult result;
    try {
        Table t = [&cfg] {
            if (cfg.subcommand == "interp") return run_interp(cfg);
            if (cfg.subcommand == "bounds") return run_bounds(cfg);
            if (cfg.subcommand == "fekete") return run_fekete(cfg);
            if (cfg.subcommand == "capacity") return run_capacity(cfg);
            if (cfg.subcommand == "zeros") return run_zeros(cfg);
            if (cfg.subcommand == "laplace") return run_laplace(cfg);
            throw ConfigError("unknown subcommand: " + cfg.subcommand);
        }();
        if (cfg.format == "json")
            result.artifact = t.to_json();
        else if (cfg.format == "csv")
            result.artifact = t.to_csv();
        else
            throw ConfigError("unknown format: " + cfg.format);
        if (!cfg.output_path.empty()) write_text_file(cfg.output_path, result.artifact);
        return result;
    } catch (const Error& e) {
        const std::string kind = classify(e);
        result.exit_code = kind == "config" ? 2 : 3;
        result.error_json = error_payload(kind, e.what());
        return result;
    } catch (const std::exception& e) {
        result.exit_code = 3;
        result.error_json = error_payload("internal", e.what());
        return result;
    }
}

}  // namespace fpade
