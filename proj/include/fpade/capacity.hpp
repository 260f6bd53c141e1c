#ifndef FPADE_CAPACITY_HPP
#define FPADE_CAPACITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fpade/compact_set.hpp"
#include "fpade/frequency.hpp"
#include "fpade/interpolation.hpp"
#include "fpade/log_scale.hpp"

namespace fpade {

// log prod_{i<j} |p_j - p_i|; -inf when two points collide.
double log_vandermonde_product(const std::vector<Cplx>& points);

// Result of an extremal-configuration search: m points of the set with
// (locally) maximal prod_{i<j} |q_j - q_i| over the search grid.
struct FeketeResult {
    std::vector<Cplx> points;
    double log_vm = 0.0;      // log of the achieved product
    int exchange_passes = 0;  // passes until no single-point swap improved
    bool exact = false;       // true when the circle shortcut was taken
    bool converged = true;    // false if the 50-pass cap was hit
};

// Greedy Leja initialization on the grid followed by single-point exchange
// passes; the objective delta of a swap is evaluated incrementally in O(m).
// Circles and disks shortcut to scaled roots of unity, which are exactly
// optimal there.  Fully deterministic: ties break toward the lowest grid
// index (the seed parameter is accepted for interface uniformity).
// grid_n = 0 means the default max(512, 16 m).
FeketeResult fekete_search(const CompactSet& k, int m, int grid_n = 0,
                           std::uint64_t seed = 0);

// Sequence m = 2..m_max, warm-starting each search from the previous
// configuration plus one greedily added point.
std::vector<FeketeResult> fekete_array(const CompactSet& k, int m_max, int grid_n = 0,
                                       std::uint64_t seed = 0);

struct VmRow {
    int m;
    double log_vm;
    double raw_estimate;  // V_m^{2/(m(m-1))}
    double d_estimate;    // exp(log V_m - 2 log V_{m-1} + log V_{m-2}); NaN for m < 4
};

// V_m sequence with both the raw normalization and a second-difference
// estimator of the transfinite diameter.  The raw sequence converges like a
// 1/log m correction and is still ~10% high at m = 40; the second difference
// cancels the m log m term and lands within a percent or two.
std::vector<VmRow> vm_sequence(const CompactSet& k, int m_max, int grid_n = 0);

struct ChebyshevBracket {
    int m;                // bracket built from V_m and V_{m-1}
    double tau_low;       // (V_m / (m V_{m-1}))^{1/(m-1)}
    double tau_high;      // (V_m / V_{m-1})^{1/(m-1)}
    double direct_upper;  // grid sup norm^{1/(m-1)} of the monic polynomial
                          // with roots at the (m-1)-point configuration
};

// Brackets the degree-(m-1) Chebyshev constant through the ratio V_m/V_{m-1}
// and adds the explicit monic upper bound from the (m-1)-point nodes.
ChebyshevBracket chebyshev_bracket(const CompactSet& k, int m, int grid_n = 0);

struct CapacityRow {
    int m;
    double log_eps_low;   // log( e^{-M} tau_{m-1}^{m-1} / (m-1)! )
    double log_eps_high;  // log( Gamma e^{M} V_m^{2/m} / (m-1)! )
    double norm_low;      // m exp(log_eps_low / m)
    double norm_high;     // m exp(log_eps_high / m)
    double log_t_low;     // operator-norm bracket of the searched tuple
    double log_t_high;
    double product_low;   // t_low eps_low, consistency with 1 <= t eps
    double product_high;  // t_high eps_high, consistency with t eps <= Gamma e^{2M}
};

// The normalized sequence m eps_m^{1/m} along near-extremal tuples of K,
// whose limit is e times the transfinite diameter.  The eps_m bracket uses
// tau_{m-1}^{m-1} below (exact value when the shape has one, else the V-ratio
// lower end) and V_m^{2/m} above.  M is the enclosing radius of K.
std::vector<CapacityRow> capacity_limits(const CompactSet& k, const EntireFunction& f_base,
                                         int m_max, int grid_n = 0);

// (1/m) sum_i q_i^n for n = 1..n_max: moments of the counting measure of the
// tuple, for comparison against equilibrium-measure moments.
std::vector<Cplx> empirical_moments(const FrequencyTuple& q, int n_max);

// Closed-form equilibrium moments: 0 for the circle/disk (n >= 1), and
// binom(n, n/2)/2^n for even n on [-1, 1] (arcsine), 0 for odd n.
double arcsine_moment(int n);

}  // namespace fpade

#endif
