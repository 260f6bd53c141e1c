#ifndef FPADE_LAPLACE_HPP
#define FPADE_LAPLACE_HPP

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fpade/frequency.hpp"
#include "fpade/interpolation.hpp"
#include "fpade/series.hpp"

namespace fpade {

// A finite complex measure on the unit circle: either a finite atomic
// combination sum_k mass_k delta_{loc_k}, or an absolutely continuous
// measure chi(theta) dtheta described by finitely many Fourier coefficients
// chihat(n) = (1/2pi) int chi(e^{i theta}) e^{-i n theta} dtheta.
class SpectralMeasure {
  public:
    static SpectralMeasure atomic(std::vector<Cplx> locations, std::vector<Cplx> masses);
    // Finite Fourier support; n outside the map means chihat(n) = 0.
    static SpectralMeasure circle_density(std::map<int, Cplx> fourier);
    // Parse the JSON forms {"kind":"atomic","atoms":[{"loc":[re,im],
    // "mass":[re,im]},...]} and {"kind":"fourier","coeffs":{"-3":[re,im],...}}.
    static SpectralMeasure from_json(const std::string& json_text);

    bool is_atomic() const { return atomic_; }
    const std::vector<Cplx>& locations() const { return locations_; }
    const std::vector<Cplx>& masses() const { return masses_; }
    const std::map<int, Cplx>& fourier() const { return fourier_; }

    // chi(e^{i theta}) reconstructed from the Fourier coefficients.
    Cplx density_value(double theta) const;

    // int zeta^n dmu: sum mass_k loc_k^n for atoms, 2 pi chihat(-n) for
    // densities.
    Cplx moment(int n) const;

    // int phi dmu: finite sum for atoms; 8192-panel trapezoid with one
    // Richardson doubling as the error estimate for densities (throws
    // QuadratureNonConvergent when the doubling moves the value by > tol).
    Cplx integrate(const std::function<Cplx(Cplx)>& phi, double tol = 1e-9) const;

    // |mu|(K): sum |mass_k| for atoms; for densities the quadrature of
    // int |chi| dtheta inflated by the 1.005 guard factor.
    double total_variation() const;

  private:
    SpectralMeasure() = default;

    bool atomic_ = true;
    std::vector<Cplx> locations_;
    std::vector<Cplx> masses_;
    std::map<int, Cplx> fourier_;
};

// Lagrange basis for a node tuple: l_i(z) = prod_{j != i} (z - q_j) /
// prod_{j != i} (q_i - q_j).  Numerators use prefix/suffix products, and all
// magnitude accumulation is done in log scale so tightly clustered node sets
// cannot underflow the denominators.
class LagrangeSystem {
  public:
    explicit LagrangeSystem(FrequencyTuple nodes);

    const FrequencyTuple& nodes() const { return nodes_; }
    // (l_1(z), ..., l_m(z)).
    std::vector<Cplx> weights(Cplx z) const;

  private:
    FrequencyTuple nodes_;
    std::vector<LogComplex> denominators_;
};

// Closed-form Lagrange weights for the m-th roots of unity: with
// w(z) = (z^m - 1)/(m (z - 1)) (power-sum branch for |z - 1| < 1e-8),
// l_j(z) = w(z / zeta_j) for zeta_j = e^{2 pi i j / m}, j = 0..m-1.
std::vector<Cplx> roots_of_unity_lagrange(int m, Cplx z);

// L_F mu (z) = int F(z zeta) dmu(zeta).
Cplx laplace_transform(const SpectralMeasure& mu, const EntireFunction& f_base,
                       Cplx z, double tol = 1e-9);

// The transform as a holomorphic function by Taylor data g_n = F_n moment(n);
// entire for measures supported on the circle (radius reported as 1e12).
HoloFunction laplace_holo(const SpectralMeasure& mu, const EntireFunction& f_base);

// Interpolation of L_F mu at the nodes via the Lagrange-coefficient formula
// c_i = int l_i dmu, skipping the linear solve entirely.
FPolynomial interpolate_laplace(const SpectralMeasure& mu, const EntireFunction& f_base,
                                const FrequencyTuple& nodes);

// sum_j |int l_j dmu|; equals the ell-1 norm of interpolate_laplace and does
// not depend on F.
double lambda_functional(const SpectralMeasure& mu, const FrequencyTuple& nodes);

// Lambda for the point mass at -1 with roots-of-unity nodes: exactly 1 for
// even m (the node at index m/2 is -1), and (1/m) sum_j 1/|cos(pi j / m)|
// for odd m.  Computed through the closed-form Lagrange weights; the trig
// expression is the test oracle.
double dirac_lambda(int m);

// Same point mass with the negated node set -Q_m ("rotated" roots of unity,
// i.e. the roots of z^m = 1 reflected through 0, which contain -1 for every
// m): identically 1.
double dirac_lambda_rotated(int m);

struct LambdaRow {
    int m;
    double lambda;    // Lambda(Q_m, chi) = (2 pi / m) sum_j |chi_m^-(zeta_j)|
    double limit;     // int_0^{2pi} |chi^-(e^{i theta})| dtheta
    double abs_diff;
};

// Lambda along roots-of-unity nodes for an absolutely continuous measure,
// against its limit: chi_m^- is the partial sum of the nonpositive-frequency
// part sum_{n=0}^{m-1} chihat(-n) zeta^{-n}, and the limit integrand is the
// full chi^-.  Densities must have finite Fourier support within the cap
// (default 512), else AbsHypothesisViolated.
std::vector<LambdaRow> lambda_limit_abs(const SpectralMeasure& chi,
                                        const std::vector<int>& m_list,
                                        int support_cap = 512);

struct ChiRResult {
    double r;
    int m;
    double lambda;            // Lambda(Q_m, chi_r) via closed-form partial sums
    double l1_chi;            // int_0^{2pi} |chi_r| dtheta (= 4 pi exactly)
    double l1_chi_minus;      // int_0^{2pi} |chi_r^-| dtheta
    bool quadrature_converged = true;
};

// The peaked witness family chi_r(e^{i theta}) = 2 Re 1/(1 - r e^{i theta}),
// 0 < r < 1, with chi_r^- = 1 + 1/(1 - r e^{-i theta}).  The integrals use
// adaptive Simpson refinement around theta = 0 where the density
// concentrates; near r = 1 non-convergence is flagged, not fatal.
ChiRResult chi_r_family(double r, int m);

}  // namespace fpade

#endif
