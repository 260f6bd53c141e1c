#ifndef FPADE_ZEROS_HPP
#define FPADE_ZEROS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "fpade/compact_set.hpp"
#include "fpade/interpolation.hpp"
#include "fpade/series.hpp"

namespace fpade {

struct ZeroCount {
    std::int64_t count = 0;        // winding number of f along |z| = radius
    double radius = 0.0;           // contour radius actually used (may be nudged)
    double winding_residual = 0.0; // |raw winding / 2 pi - count|
    int retries = 0;               // contour nudges performed
    std::int64_t evaluations = 0;  // total contour evaluations
};

// Zeros of f inside |z| < radius by the argument principle: phase increments
// are summed along the circle, bisecting adaptively wherever a step turns by
// more than pi/2 (budget 2^22 evaluations, else NonConvergent).  A contour
// passing near a zero is detected by min sampled |f| below 1e-8 times the
// max; the radius is then nudged by (1 + 1e-4), up to 8 times, before
// ContourThroughZero is thrown.  Accepted counts have residual < 0.25.
ZeroCount count_zeros(const std::function<Cplx(Cplx)>& f, double radius,
                      int initial_samples = 4096);

ZeroCount count_zeros(const FPolynomial& f, double radius, int initial_samples = 4096);

struct NmRow {
    int m;
    std::int64_t max_count = -1;  // max over trials; -1 when every trial failed
    double bound = 0.0;           // growth-bound curve evaluated at r
    double ratio = 0.0;           // max_count / (m log m)
    int failed_trials = 0;
};

// Zero-count growth experiment.  For each m: take the near-extremal tuple of
// K (trial 0) and seeded angular perturbations of it (further trials), build
// the order-(m-1)-vanishing extremal F-polynomial, and count its zeros inside
// |z| < contour_radius through the Taylor-series evaluation route.  The bound
// column is
//   (log Gamma + M(r+1) + m log m - (m-1) log tau_{m-1}) / log((r^2+1)/(2r))
// with tau_{m-1} the exact Chebyshev constant when the shape has one, else
// the search-based lower bracket end.  Failed trials are counted, not fatal.
std::vector<NmRow> zero_growth(const CompactSet& k, const EntireFunction& f_base,
                               const std::vector<int>& m_list, int trials = 3,
                               std::uint64_t seed = 2026, double r = 3.0,
                               double contour_radius = 1.0 + 1e-6, int grid_n = 0);

}  // namespace fpade

#endif
