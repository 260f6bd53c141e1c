#ifndef FPADE_INTERPOLATION_HPP
#define FPADE_INTERPOLATION_HPP

#include <string>
#include <vector>

#include "fpade/frequency.hpp"
#include "fpade/log_scale.hpp"
#include "fpade/series.hpp"

namespace fpade {

// f(z) = sum_j c_j F(q_j z): a linear combination of dilations of one entire
// function.  Norms are the max and sum of |c_j| over the stored coefficients.
class FPolynomial {
  public:
    FPolynomial(EntireFunction f_base, FrequencyTuple q, std::vector<Cplx> coeffs);

    const EntireFunction& base() const { return base_; }
    const FrequencyTuple& frequencies() const { return q_; }
    const std::vector<Cplx>& coefficients() const { return coeffs_; }
    int order() const { return q_.size(); }

    double norm_inf() const;  // max_j |c_j|
    double norm_one() const;  // sum_j |c_j|

    // sum_j c_j F(q_j z) with the tolerance split across terms as
    // tol / (m max(1, |c_j|)); total error below tol (1 + norm_one()).
    Cplx evaluate(Cplx z, double tol = 1e-15) const;

    // n-th derivative at the origin: F_n * sum_j c_j q_j^n.
    Cplx derivative_at_zero(int n) const;

    // Deterministic JSON object (sorted keys, 17-digit floats).
    std::string to_json() const;

  private:
    EntireFunction base_;
    FrequencyTuple q_;
    std::vector<Cplx> coeffs_;
};

// gamma_j(q) = prod_{i != j} |q_j - q_i|, the distance product from q_j to
// the rest of the tuple, and gamma(q) = min_j gamma_j, all in log scale.
// |det A_m| = gamma_j |det A_{m-1}(q with q_j removed)| ties this to the
// closed-form inverse: the largest last-column entry is 1/gamma(q).
struct GammaProfile {
    std::vector<double> log_gamma_j;
    double log_gamma_min;
    int argmin;
};

GammaProfile gamma_profile(const FrequencyTuple& q);

// The interpolation operator: given the first m derivatives of g at 0, find
// the unique f with matching derivatives 0..m-1 by solving
// A_m(q) c = (g_{k-1} / F_{k-1})_{k=1..m} through the closed-form inverse.
// conditioning_warning (optional) receives the inverse's metadata flag.
FPolynomial interpolate(const HoloFunction& g, const EntireFunction& f_base,
                        const FrequencyTuple& q,
                        bool* conditioning_warning = nullptr);

// The interpolation error bound at z against the circle |w| = r:
//   (|z|/r)^m (r/(r-|z|) + Gamma e^{2 M r}) max_{|w|=r} |g|
// with M = q.max_abs().  Requires |z| < r < g.radius().  The sup of |g| is a
// dense-sample proxy: 4096 equispaced circle points inflated by 1.01.
double error_bound(const HoloFunction& g, const FrequencyTuple& q,
                   const EntireFunction& f_base, Cplx z, double r,
                   int samples = 4096, double inflation = 1.01);

// Bracket bounds for the norm of the interpolation operator:
//   t in [(m-1)!/(Gamma gamma), e^M (m-1)!/gamma]
//   eps in [e^{-M} gamma/(m-1)!, Gamma e^M gamma/(m-1)!]
// carried in log scale because gamma(q) underflows quickly.
struct TqBounds {
    LogBracket t;
    LogBracket eps;
};

TqBounds operator_bounds(const EntireFunction& f_base, const FrequencyTuple& q);

// The extremal F-polynomial: c_j = (-1)^{m+j} alpha det A_{m-1}(q^j) with
// alpha = gamma(q) / |det A_m(q)|, so |c_j| = gamma / gamma_j <= 1.  The
// coefficients are assembled in log scale and never overflow.
FPolynomial extremal_fpoly(const EntireFunction& f_base, const FrequencyTuple& q);

// Evaluates the extremal F-polynomial through its Taylor series
//   f(z) = gamma(q) e^{i arg det} sum_{k >= m-1} (F_k / k!) h_{k-m+1}(q) z^k
// (h_l = complete homogeneous symmetric polynomials, in-place ascending
// recurrence).  This route avoids the catastrophic cancellation that the
// coefficient form suffers for m around 20.
Cplx extremal_series(const EntireFunction& f_base, const FrequencyTuple& q, Cplx z,
                     double tol = 1e-15);

// The entire factor S in f(z) = gamma e^{i arg det} z^{m-1}/(m-1)! S(z),
// S(z) = sum_{l>=0} F_{l+m-1} h_l(q) (m-1)!/(l+m-1)! z^l with S(0) = F_{m-1}.
// Zero counts of f reduce to m-1 plus the winding of S, which keeps large-m
// experiments away from the underflow of the gamma/(m-1)! prefactor.
Cplx extremal_series_factor(const EntireFunction& f_base, const FrequencyTuple& q,
                            Cplx z, double tol = 1e-15);

// max |f| over a dense sample of |z| = r, inflated; shared sampling helper.
double sup_norm_disk(const FPolynomial& f, double r, int samples = 4096,
                     double inflation = 1.0);

// Same sampling for the extremal F-polynomial but through extremal_series.
// The coefficient route loses all significant digits once the true values
// sit near gamma(q)/(m-1)! (cancellation of O(1) terms); the series route
// keeps full relative accuracy.
double extremal_sup_norm(const EntireFunction& f_base, const FrequencyTuple& q,
                         double r, int samples = 4096, double inflation = 1.01);

}  // namespace fpade

#endif
