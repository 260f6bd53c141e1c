#include "fpade/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fpade/capacity.hpp"
#include "fpade/interpolation.hpp"

namespace fpade {

namespace {

constexpr std::int64_t kEvalBudget = std::int64_t(1) << 22;
constexpr double kNearZeroRel = 1e-8;
constexpr double kAngleFloor = 1e-14;
constexpr double kNudgeFactor = 1.0 + 1e-4;
constexpr int kMaxNudges = 8;

struct Attempt {
    double total = 0.0;
    double min_abs = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    bool out_of_budget = false;
};

struct Segment {
    double ta, tb;
    Cplx va, vb;
};

// One pass around |z| = radius accumulating the phase increment.  Segments
// whose increment exceeds pi/2 are bisected until resolved or the budget
// runs out.  Returns false when a sample comes too close to zero, in which
// case the caller nudges the radius and tries again.
bool run_attempt(const std::function<Cplx(Cplx)>& f, double radius, int n0,
                 std::int64_t& evals, Attempt& a) {
    const double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<Cplx> ring(static_cast<size_t>(n0));
    for (int k = 0; k < n0; ++k) {
        if (++evals > kEvalBudget) {
            a.out_of_budget = true;
            return true;
        }
        const double t = two_pi * k / n0;
        ring[static_cast<size_t>(k)] = f(radius * Cplx(std::cos(t), std::sin(t)));
        const double mag = std::abs(ring[static_cast<size_t>(k)]);
        a.min_abs = std::min(a.min_abs, mag);
        a.max_abs = std::max(a.max_abs, mag);
    }
    if (a.max_abs == 0.0 || a.min_abs < kNearZeroRel * a.max_abs) return false;
    std::vector<Segment> stack;
    for (int k = n0 - 1; k >= 0; --k) {
        Segment s;
        s.ta = two_pi * k / n0;
        s.tb = two_pi * (k + 1) / n0;
        s.va = ring[static_cast<size_t>(k)];
        s.vb = ring[static_cast<size_t>((k + 1) % n0)];
        stack.push_back(s);
    }
    while (!stack.empty()) {
        const Segment s = stack.back();
        stack.pop_back();
        const double delta = wrap_phase(std::arg(s.vb) - std::arg(s.va));
        if (std::abs(delta) <= 0.5 * 3.14159265358979323846 || s.tb - s.ta < kAngleFloor) {
            a.total += delta;
            continue;
        }
        if (++evals > kEvalBudget) {
            a.out_of_budget = true;
            return true;
        }
        const double tm = 0.5 * (s.ta + s.tb);
        const Cplx vm = f(radius * Cplx(std::cos(tm), std::sin(tm)));
        const double mag = std::abs(vm);
        a.min_abs = std::min(a.min_abs, mag);
        a.max_abs = std::max(a.max_abs, mag);
        if (a.min_abs < kNearZeroRel * a.max_abs) return false;
        stack.push_back(Segment{tm, s.tb, vm, s.vb});
        stack.push_back(Segment{s.ta, tm, s.va, vm});
    }
    return true;
}

// Deterministic jitter of a circular configuration: each angle moves by at
// most pi/(4m), which preserves separation.
FrequencyTuple jitter_circle(int m, double radius, std::mt19937_64& rng) {
    const double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<Cplx> pts(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = two_pi * j / m +
                         (2.0 * uniform01(rng) - 1.0) * 3.14159265358979323846 / (4.0 * m);
        pts[static_cast<size_t>(j)] = radius * Cplx(std::cos(t), std::sin(t));
    }
    return FrequencyTuple(pts);
}

// Jitter along the search grid: move each point a few grid slots.  Falls
// back to the unperturbed configuration when the move would collide.
FrequencyTuple jitter_grid(const std::vector<Cplx>& base, const std::vector<Cplx>& grid,
                           std::mt19937_64& rng) {
    const int n = static_cast<int>(grid.size());
    const int m = static_cast<int>(base.size());
    const int span = std::max(1, n / (8 * m));
    std::vector<Cplx> pts = base;
    for (int i = 0; i < m; ++i) {
        int nearest = 0;
        double best = std::numeric_limits<double>::infinity();
        for (int g = 0; g < n; ++g) {
            const double d = std::abs(grid[static_cast<size_t>(g)] - base[static_cast<size_t>(i)]);
            if (d < best) {
                best = d;
                nearest = g;
            }
        }
        const int off =
            static_cast<int>(std::floor(uniform01(rng) * (2 * span + 1))) - span;
        const int idx = std::clamp(nearest + off, 0, n - 1);
        pts[static_cast<size_t>(i)] = grid[static_cast<size_t>(idx)];
    }
    try {
        return FrequencyTuple(pts);
    } catch (const DomainError&) {
        return FrequencyTuple(base);
    }
}

}  // namespace

ZeroCount count_zeros(const std::function<Cplx(Cplx)>& f, double radius,
                      int initial_samples) {
    if (!(radius > 0.0)) throw DomainError("contour radius must be positive");
    if (initial_samples < 16) throw DomainError("need at least 16 contour samples");
    const double two_pi = 2.0 * 3.14159265358979323846;
    ZeroCount zc;
    zc.evaluations = 0;
    double rad = radius;
    for (int attempt = 0; attempt <= kMaxNudges; ++attempt) {
        Attempt a;
        const bool clean = run_attempt(f, rad, initial_samples, zc.evaluations, a);
        if (a.out_of_budget)
            throw NonConvergent("winding computation exceeded the evaluation budget");
        if (!clean) {
            rad *= kNudgeFactor;
            zc.retries = attempt + 1;
            continue;
        }
        const double turns = a.total / two_pi;
        zc.count = static_cast<int>(std::llround(turns));
        zc.radius = rad;
        zc.winding_residual = std::abs(turns - zc.count);
        if (zc.winding_residual >= 0.25)
            throw NonConvergent("winding number failed to settle near an integer");
        return zc;
    }
    throw ContourThroughZero("function stays near zero on every nudged contour");
}

ZeroCount count_zeros(const FPolynomial& p, double radius, int initial_samples) {
    return count_zeros([&p](Cplx z) { return p.evaluate(z); }, radius, initial_samples);
}

std::vector<NmRow> zero_growth(const CompactSet& k, const EntireFunction& f_base,
                               const std::vector<int>& m_list, int trials,
                               std::uint64_t seed, double r, double contour_radius,
                               int grid_n) {
    if (m_list.empty()) throw DomainError("order list must not be empty");
    if (trials < 1) throw DomainError("need at least one trial");
    if (!(r > 1.0)) throw DomainError("growth radius must exceed 1");
    int m_top = 0;
    for (int m : m_list) {
        if (m < 2) throw DomainError("orders must be >= 2");
        m_top = std::max(m_top, m);
    }
    const bool circular = k.is_circular();
    std::vector<FeketeResult> arr;
    std::vector<Cplx> grid;
    if (!circular) {
        arr = fekete_array(k, m_top, grid_n);
        grid = k.boundary_grid(grid_n > 0 ? grid_n : std::max(512, 16 * m_top));
    }
    const double big_m = k.enclosing_radius();
    const double log_gamma_bound = std::log(f_base.gamma());
    const double denom = std::log((r * r + 1.0) / (2.0 * r));
    std::vector<NmRow> rows;
    rows.reserve(m_list.size());
    for (int m : m_list) {
        FrequencyTuple base = circular
                                  ? FrequencyTuple::roots_of_unity(m, k.circle_radius())
                                  : FrequencyTuple(arr[static_cast<size_t>(m) - 2].points);
        double log_tau;
        if (const auto tau = k.known_chebyshev(m - 1)) {
            log_tau = std::log(*tau);
        } else {
            if (m < 3) throw DomainError("orders must be >= 3 for this shape");
            log_tau = (arr[static_cast<size_t>(m) - 2].log_vm -
                       arr[static_cast<size_t>(m) - 3].log_vm -
                       std::log(static_cast<double>(m))) /
                      (m - 1.0);
        }
        NmRow row;
        row.m = m;
        row.bound = (log_gamma_bound + big_m * (r + 1.0) +
                     m * std::log(static_cast<double>(m)) - (m - 1.0) * log_tau) /
                    denom;
        row.failed_trials = 0;
        std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(m)));
        for (int t = 0; t < trials; ++t) {
            FrequencyTuple q = base;
            if (t > 0)
                q = circular ? jitter_circle(m, k.circle_radius(), rng)
                             : jitter_grid(base.points(), grid, rng);
            // Count through the reduced series factor: the polynomial itself
            // is the factor times a fixed z^(m-1) monomial, so its winding on
            // the contour is m-1 plus the factor's winding.
            auto factor = [&](Cplx z) { return extremal_series_factor(f_base, q, z); };
            try {
                const ZeroCount zc = count_zeros(factor, contour_radius);
                row.max_count = std::max(row.max_count, (m - 1) + zc.count);
            } catch (const ContourThroughZero&) {
                ++row.failed_trials;
            } catch (const NonConvergent&) {
                ++row.failed_trials;
            }
        }
        row.ratio = row.max_count >= 0
                        ? row.max_count / (m * std::log(static_cast<double>(m)))
                        : std::numeric_limits<double>::quiet_NaN();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace fpade
