#ifndef FPADE_FREQUENCY_HPP
#define FPADE_FREQUENCY_HPP

#include <complex>
#include <random>
#include <vector>

#include "fpade/errors.hpp"

namespace fpade {

using Cplx = std::complex<double>;

// An ordered tuple of m distinct complex frequencies.  Construction enforces
// the conditioning guard separation > 1e-10 * (1 + max|q_j|); everything
// downstream (determinants, inverses, Lagrange weights) relies on it.
class FrequencyTuple {
  public:
    explicit FrequencyTuple(std::vector<Cplx> points);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Cplx>& points() const { return points_; }
    Cplx operator[](int i) const { return points_[static_cast<size_t>(i)]; }

    // Minimum pairwise distance; +inf for a single point.
    double separation() const { return separation_; }
    // max_j |q_j|, the radius M of the smallest origin-centered disk
    // containing the tuple.
    double max_abs() const { return max_abs_; }

    // Tuple with point i removed (still distinct, guard inherited).
    FrequencyTuple erased(int i) const;

    // e^{2 pi i j / m} * R for j = 0..m-1.
    static FrequencyTuple roots_of_unity(int m, double radius = 1.0);

    static double separation_guard(double max_abs) { return 1e-10 * (1.0 + max_abs); }

  private:
    std::vector<Cplx> points_;
    double separation_;
    double max_abs_;
};

// Uniform in [0, 1) straight from the generator bits (53-bit mantissa), so
// sampled streams do not depend on the standard library's distribution
// implementation.
double uniform01(std::mt19937_64& rng);

// m uniform draws in the disk of the given radius, resampled until every
// pairwise distance reaches min_sep.  Deterministic given the generator
// state; throws DomainError if 10^6 draws cannot place a point.
FrequencyTuple random_separated_tuple(int m, double min_sep, std::mt19937_64& rng,
                                      double radius = 1.0);

}  // namespace fpade

#endif
