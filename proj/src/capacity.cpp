#include "fpade/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fpade/parallel.hpp"

namespace fpade {

namespace {

constexpr double kImproveThreshold = 1e-12;
constexpr int kMaxExchangePasses = 50;

int default_grid(int m) { return std::max(512, 16 * m); }

double neg_inf() { return -std::numeric_limits<double>::infinity(); }

// Separation guard shared with FrequencyTuple so search results always
// convert into valid tuples.
double guard_for(const std::vector<Cplx>& pts) {
    double scale = 0.0;
    for (const Cplx& p : pts) scale = std::max(scale, std::abs(p));
    return FrequencyTuple::separation_guard(scale);
}

// Greedy Leja extension: repeatedly append the grid point maximizing the
// product of distances to the points already chosen (ties toward the lowest
// grid index).  acc[g] carries the running log product.
void leja_extend(const std::vector<Cplx>& grid, std::vector<Cplx>& pts,
                 std::vector<double>& acc, int target) {
    const int n = static_cast<int>(grid.size());
    while (static_cast<int>(pts.size()) < target) {
        int best = -1;
        double best_val = neg_inf();
        for (int g = 0; g < n; ++g)
            if (acc[static_cast<size_t>(g)] > best_val) {
                best_val = acc[static_cast<size_t>(g)];
                best = g;
            }
        if (best < 0 || best_val == neg_inf())
            throw GridTooCoarse("grid exhausted while placing points");
        const Cplx p = grid[static_cast<size_t>(best)];
        pts.push_back(p);
        for (int g = 0; g < n; ++g) {
            const double d = std::abs(grid[static_cast<size_t>(g)] - p);
            acc[static_cast<size_t>(g)] =
                d == 0.0 ? neg_inf() : acc[static_cast<size_t>(g)] + std::log(d);
        }
    }
}

// Single-point exchange until a full pass finds no improving swap.  Each
// candidate is scored by the O(m) objective delta against the current
// configuration; the scan is parallel, the selection serial and tie-stable.
void exchange_passes(const std::vector<Cplx>& grid, std::vector<Cplx>& pts,
                     FeketeResult& out) {
    const int n = static_cast<int>(grid.size());
    const int m = static_cast<int>(pts.size());
    const double guard = guard_for(pts) * 4.0;
    std::vector<double> deltas(static_cast<size_t>(n));
    out.converged = false;
    for (int pass = 0; pass < kMaxExchangePasses; ++pass) {
        bool improved = false;
        for (int i = 0; i < m; ++i) {
            double base = 0.0;
            for (int j = 0; j < m; ++j)
                if (j != i) base += std::log(std::abs(pts[static_cast<size_t>(i)] -
                                                      pts[static_cast<size_t>(j)]));
            parallel_for(n, [&](int g) {
                const Cplx cand = grid[static_cast<size_t>(g)];
                double acc = 0.0;
                for (int j = 0; j < m; ++j) {
                    if (j == i) continue;
                    const double d = std::abs(cand - pts[static_cast<size_t>(j)]);
                    if (d <= guard) {
                        acc = neg_inf();
                        break;
                    }
                    acc += std::log(d);
                }
                deltas[static_cast<size_t>(g)] = acc - base;
            });
            int best = -1;
            double best_delta = kImproveThreshold;
            for (int g = 0; g < n; ++g)
                if (deltas[static_cast<size_t>(g)] > best_delta) {
                    best_delta = deltas[static_cast<size_t>(g)];
                    best = g;
                }
            if (best >= 0) {
                pts[static_cast<size_t>(i)] = grid[static_cast<size_t>(best)];
                improved = true;
            }
        }
        out.exchange_passes = pass + 1;
        if (!improved) {
            out.converged = true;
            break;
        }
    }
}

FeketeResult finish(std::vector<Cplx> pts) {
    FeketeResult r;
    r.log_vm = log_vandermonde_product(pts);
    double sep = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            sep = std::min(sep, std::abs(pts[i] - pts[j]));
    if (pts.size() > 1 && sep <= guard_for(pts))
        throw GridTooCoarse("search result violates the separation guard");
    r.points = std::move(pts);
    return r;
}

FeketeResult circle_shortcut(const CompactSet& k, int m) {
    FeketeResult r = finish(FrequencyTuple::roots_of_unity(m, k.circle_radius()).points());
    r.exact = true;
    return r;
}

}  // namespace

double log_vandermonde_product(const std::vector<Cplx>& points) {
    double acc = 0.0;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            const double d = std::abs(points[j] - points[i]);
            if (d == 0.0) return neg_inf();
            acc += std::log(d);
        }
    return acc;
}

FeketeResult fekete_search(const CompactSet& k, int m, int grid_n, std::uint64_t) {
    if (m < 1) throw DomainError("point count must be >= 1");
    if (k.is_circular()) return circle_shortcut(k, m);
    const int n = grid_n > 0 ? grid_n : default_grid(m);
    if (k.kind() != CompactSet::Kind::Cloud && n < 4 * m)
        throw DomainError("grid must have at least 4 m points");
    const std::vector<Cplx> grid = k.boundary_grid(n);
    std::vector<Cplx> pts;
    std::vector<double> acc(grid.size(), 0.0);
    // Anchor the greedy phase at the outermost grid point.
    {
        int best = 0;
        double best_val = -1.0;
        for (size_t g = 0; g < grid.size(); ++g)
            if (std::abs(grid[g]) > best_val) {
                best_val = std::abs(grid[g]);
                best = static_cast<int>(g);
            }
        const Cplx p = grid[static_cast<size_t>(best)];
        pts.push_back(p);
        for (size_t g = 0; g < grid.size(); ++g) {
            const double d = std::abs(grid[g] - p);
            acc[g] = d == 0.0 ? neg_inf() : std::log(d);
        }
    }
    leja_extend(grid, pts, acc, m);
    FeketeResult shaped;
    if (m > 1) exchange_passes(grid, pts, shaped);
    FeketeResult r = finish(std::move(pts));
    r.exchange_passes = shaped.exchange_passes;
    r.converged = m > 1 ? shaped.converged : true;
    return r;
}

std::vector<FeketeResult> fekete_array(const CompactSet& k, int m_max, int grid_n,
                                       std::uint64_t seed) {
    if (m_max < 2) throw DomainError("array needs m_max >= 2");
    std::vector<FeketeResult> out;
    out.reserve(static_cast<size_t>(m_max) - 1);
    if (k.is_circular()) {
        for (int m = 2; m <= m_max; ++m) out.push_back(circle_shortcut(k, m));
        return out;
    }
    const int n = grid_n > 0 ? grid_n : default_grid(m_max);
    if (k.kind() != CompactSet::Kind::Cloud && n < 4 * m_max)
        throw DomainError("grid must have at least 4 m points");
    const std::vector<Cplx> grid = k.boundary_grid(n);
    // Warm start: each size reuses the previous configuration, adds one Leja
    // point, then re-runs the exchange.
    std::vector<Cplx> pts = fekete_search(k, 2, n, seed).points;
    {
        FeketeResult shaped;
        exchange_passes(grid, pts, shaped);
        FeketeResult r = finish(pts);
        r.exchange_passes = shaped.exchange_passes;
        r.converged = shaped.converged;
        out.push_back(std::move(r));
    }
    for (int m = 3; m <= m_max; ++m) {
        std::vector<double> acc(grid.size(), 0.0);
        for (size_t g = 0; g < grid.size(); ++g) {
            for (const Cplx& p : pts) {
                const double d = std::abs(grid[g] - p);
                if (d == 0.0) {
                    acc[g] = neg_inf();
                    break;
                }
                acc[g] += std::log(d);
            }
        }
        leja_extend(grid, pts, acc, m);
        FeketeResult shaped;
        exchange_passes(grid, pts, shaped);
        FeketeResult r = finish(pts);
        r.exchange_passes = shaped.exchange_passes;
        r.converged = shaped.converged;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VmRow> vm_sequence(const CompactSet& k, int m_max, int grid_n) {
    if (m_max < 2) throw DomainError("sequence needs m_max >= 2");
    const std::vector<FeketeResult> arr = fekete_array(k, m_max, grid_n);
    std::vector<VmRow> rows;
    rows.reserve(arr.size());
    for (size_t idx = 0; idx < arr.size(); ++idx) {
        const int m = static_cast<int>(idx) + 2;
        VmRow row;
        row.m = m;
        row.log_vm = arr[idx].log_vm;
        row.raw_estimate = std::exp(2.0 * row.log_vm / (m * (m - 1.0)));
        row.d_estimate = std::numeric_limits<double>::quiet_NaN();
        if (m >= 4)
            row.d_estimate =
                std::exp(arr[idx].log_vm - 2.0 * arr[idx - 1].log_vm + arr[idx - 2].log_vm);
        rows.push_back(row);
    }
    return rows;
}

ChebyshevBracket chebyshev_bracket(const CompactSet& k, int m, int grid_n) {
    if (m < 2) throw DomainError("bracket needs m >= 2");
    const std::vector<FeketeResult> arr = fekete_array(k, m, grid_n);
    const double log_vm = arr[static_cast<size_t>(m) - 2].log_vm;
    const double log_vm1 = m == 2 ? 0.0 : arr[static_cast<size_t>(m) - 3].log_vm;
    ChebyshevBracket b;
    b.m = m;
    b.tau_high = std::exp((log_vm - log_vm1) / (m - 1.0));
    b.tau_low = std::exp((log_vm - log_vm1 - std::log(static_cast<double>(m))) / (m - 1.0));
    // Any explicit monic polynomial upper-bounds the minimal norm; use the
    // one with roots at the (m-1)-point configuration, on a dense grid.
    std::vector<Cplx> nodes;
    if (m == 2)
        nodes.push_back(arr[0].points[0]);
    else
        nodes = arr[static_cast<size_t>(m) - 3].points;
    const std::vector<Cplx> dense = k.boundary_grid(std::max(4096, grid_n));
    double best = neg_inf();
    for (const Cplx& z : dense) {
        double acc = 0.0;
        for (const Cplx& p : nodes) {
            const double d = std::abs(z - p);
            if (d == 0.0) {
                acc = neg_inf();
                break;
            }
            acc += std::log(d);
        }
        best = std::max(best, acc);
    }
    b.direct_upper = std::exp(best / (m - 1.0));
    return b;
}

std::vector<CapacityRow> capacity_limits(const CompactSet& k, const EntireFunction& f_base,
                                         int m_max, int grid_n) {
    if (m_max < 3) throw DomainError("limit table needs m_max >= 3");
    const std::vector<FeketeResult> arr = fekete_array(k, m_max, grid_n);
    const double big_m = k.enclosing_radius();
    const double log_gamma_bound = std::log(f_base.gamma());
    std::vector<CapacityRow> rows;
    rows.reserve(arr.size());
    for (size_t idx = 0; idx < arr.size(); ++idx) {
        const int m = static_cast<int>(idx) + 2;
        const double log_vm = arr[idx].log_vm;
        const double log_vm1 = idx == 0 ? 0.0 : arr[idx - 1].log_vm;
        const double log_fact = std::lgamma(static_cast<double>(m));
        // tau_{m-1}^{m-1}: exact when the shape has a formula, else the
        // V-ratio lower end (keeps the bracket valid).
        double log_tau_pow;
        if (const auto tau = k.known_chebyshev(m - 1))
            log_tau_pow = (m - 1.0) * std::log(*tau);
        else
            log_tau_pow = log_vm - log_vm1 - std::log(static_cast<double>(m));
        CapacityRow row;
        row.m = m;
        row.log_eps_low = -big_m + log_tau_pow - log_fact;
        row.log_eps_high = log_gamma_bound + big_m + 2.0 * log_vm / m - log_fact;
        row.norm_low = m * std::exp(row.log_eps_low / m);
        row.norm_high = m * std::exp(row.log_eps_high / m);
        const TqBounds b = operator_bounds(f_base, FrequencyTuple(arr[idx].points));
        row.log_t_low = b.t.log_lo;
        row.log_t_high = b.t.log_hi;
        row.product_low = std::exp(b.t.log_lo + b.eps.log_lo);
        row.product_high = std::exp(b.t.log_hi + b.eps.log_hi);
        rows.push_back(row);
    }
    return rows;
}

std::vector<Cplx> empirical_moments(const FrequencyTuple& q, int n_max) {
    if (n_max < 1) throw DomainError("moment order must be >= 1");
    const int m = q.size();
    std::vector<Cplx> moments(static_cast<size_t>(n_max), Cplx(0.0, 0.0));
    for (int i = 0; i < m; ++i) {
        Cplx p(1.0, 0.0);
        for (int n = 1; n <= n_max; ++n) {
            p *= q[i];
            moments[static_cast<size_t>(n) - 1] += p;
        }
    }
    for (Cplx& v : moments) v /= static_cast<double>(m);
    return moments;
}

double arcsine_moment(int n) {
    if (n < 0) throw DomainError("moment order must be >= 0");
    if (n % 2 != 0) return 0.0;
    return std::exp(std::lgamma(n + 1.0) - 2.0 * std::lgamma(n / 2 + 1.0) -
                    n * std::log(2.0));
}

}  // namespace fpade
