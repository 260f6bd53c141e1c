#include "fpade/interpolation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fpade/io.hpp"
#include "fpade/vandermonde.hpp"

namespace fpade {

FPolynomial::FPolynomial(EntireFunction f_base, FrequencyTuple q, std::vector<Cplx> coeffs)
    : base_(std::move(f_base)), q_(std::move(q)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != q_.size())
        throw DomainError("coefficient count must match frequency count");
}

double FPolynomial::norm_inf() const {
    double m = 0.0;
    for (const Cplx& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double FPolynomial::norm_one() const {
    double s = 0.0;
    for (const Cplx& c : coeffs_) s += std::abs(c);
    return s;
}

Cplx FPolynomial::evaluate(Cplx z, double tol) const {
    const int m = order();
    Cplx sum(0.0, 0.0);
    for (int j = 0; j < m; ++j) {
        const Cplx c = coeffs_[static_cast<size_t>(j)];
        if (c == Cplx(0.0, 0.0)) continue;
        const double term_tol = tol / (m * std::max(1.0, std::abs(c)));
        sum += c * base_.evaluate(q_[j] * z, term_tol);
    }
    return sum;
}

Cplx FPolynomial::derivative_at_zero(int n) const {
    Cplx power_sum(0.0, 0.0);
    for (int j = 0; j < order(); ++j) {
        Cplx p(1.0, 0.0);
        for (int i = 0; i < n; ++i) p *= q_[j];
        power_sum += coeffs_[static_cast<size_t>(j)] * p;
    }
    return base_.coeff(n) * power_sum;
}

std::string FPolynomial::to_json() const {
    auto pair_list = [](const std::vector<Cplx>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += "[" + fmt_double(v[i].real()) + "," + fmt_double(v[i].imag()) + "]";
        }
        return s + "]";
    };
    std::string s = "{\"F\":\"" + json_escape(base_.name()) + "\",";
    s += "\"coeffs\":" + pair_list(coeffs_) + ",";
    s += "\"freqs\":" + pair_list(q_.points()) + "}";
    return s;
}

GammaProfile gamma_profile(const FrequencyTuple& q) {
    const int m = q.size();
    GammaProfile p;
    p.log_gamma_j.assign(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        double acc = 0.0;
        for (int j = 0; j < m; ++j)
            if (j != i) acc += std::log(std::abs(q[i] - q[j]));
        p.log_gamma_j[static_cast<size_t>(i)] = acc;
    }
    p.argmin = 0;
    p.log_gamma_min = p.log_gamma_j[0];
    for (int i = 1; i < m; ++i)
        if (p.log_gamma_j[static_cast<size_t>(i)] < p.log_gamma_min) {
            p.log_gamma_min = p.log_gamma_j[static_cast<size_t>(i)];
            p.argmin = i;
        }
    return p;
}

FPolynomial interpolate(const HoloFunction& g, const EntireFunction& f_base,
                        const FrequencyTuple& q, bool* conditioning_warning) {
    const int m = q.size();
    const VdmInverse vi = vdm_inverse(q);
    if (conditioning_warning) *conditioning_warning = vi.conditioning_warning;
    std::vector<Cplx> rhs(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) rhs[static_cast<size_t>(k)] = g.derivative(k) / f_base.coeff(k);
    std::vector<Cplx> c(static_cast<size_t>(m), Cplx(0.0, 0.0));
    for (int i = 0; i < m; ++i) {
        Cplx acc(0.0, 0.0);
        for (int k = 0; k < m; ++k) acc += vi.inv(i, k) * rhs[static_cast<size_t>(k)];
        c[static_cast<size_t>(i)] = acc;
    }
    return FPolynomial(f_base, q, std::move(c));
}

double error_bound(const HoloFunction& g, const FrequencyTuple& q,
                   const EntireFunction& f_base, Cplx z, double r, int samples,
                   double inflation) {
    const double abs_z = std::abs(z);
    if (!(abs_z < r)) throw DomainError("bound needs |z| < r");
    if (!(r < g.radius())) throw DomainError("bound needs r inside the convergence disk");
    const int m = q.size();
    const double big_m = q.max_abs();
    const double sup_g = g.sup_on_circle(r, samples) * inflation;
    const double geom = std::pow(abs_z / r, m);
    const double exponent = 2.0 * big_m * r;
    const double growth =
        exponent < 700.0 ? std::exp(exponent) : std::numeric_limits<double>::infinity();
    return geom * (r / (r - abs_z) + f_base.gamma() * growth) * sup_g;
}

TqBounds operator_bounds(const EntireFunction& f_base, const FrequencyTuple& q) {
    const int m = q.size();
    const double big_m = q.max_abs();
    const double log_gamma_bound = std::log(f_base.gamma());
    const double log_fact = std::lgamma(static_cast<double>(m));  // log (m-1)!
    const double log_gamma_q = gamma_profile(q).log_gamma_min;
    TqBounds b;
    b.t.log_lo = log_fact - log_gamma_bound - log_gamma_q;
    b.t.log_hi = big_m + log_fact - log_gamma_q;
    b.eps.log_lo = -big_m + log_gamma_q - log_fact;
    b.eps.log_hi = log_gamma_bound + big_m + log_gamma_q - log_fact;
    return b;
}

FPolynomial extremal_fpoly(const EntireFunction& f_base, const FrequencyTuple& q) {
    const int m = q.size();
    if (m == 1) return FPolynomial(f_base, q, {Cplx(1.0, 0.0)});
    const GammaProfile profile = gamma_profile(q);
    const LogComplex det = vdm_det(q);
    const double log_alpha = profile.log_gamma_min - det.log_mag;
    std::vector<Cplx> c(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        LogComplex minor = vdm_det(q.erased(j));
        // Cofactor sign for deleting row j of the m x m system; with 0-based
        // j the usual (-1)^{m+j} reads (-1)^{m+j+1}.
        if ((m + j + 1) % 2 != 0) minor = minor.negated();
        c[static_cast<size_t>(j)] =
            LogComplex::from_polar(log_alpha + minor.log_mag, minor.phase).value();
    }
    return FPolynomial(f_base, q, std::move(c));
}

namespace {

// Truncation length for the series factor: smallest L with
// (M|z|)^{L+1} / (L+1)! e^{M|z|} < tol.
int series_factor_length(double scale, double tol) {
    if (scale == 0.0) return 0;
    const double target = std::log(tol) - scale;
    int l = 0;
    while ((l + 1.0) * std::log(scale) - std::lgamma(l + 2.0) >= target) {
        ++l;
        if (l > 100000) throw NonConvergent("series truncation exceeded 1e5 terms");
    }
    return l;
}

}  // namespace

Cplx extremal_series_factor(const EntireFunction& f_base, const FrequencyTuple& q,
                            Cplx z, double tol) {
    const int m = q.size();
    const double scale = q.max_abs() * std::abs(z);
    const int len = series_factor_length(scale, tol);
    // Complete homogeneous symmetric polynomials h_0..h_len by the in-place
    // ascending recurrence, one point absorbed at a time.
    std::vector<Cplx> h(static_cast<size_t>(len) + 1, Cplx(0.0, 0.0));
    h[0] = Cplx(1.0, 0.0);
    for (int i = 0; i < m; ++i)
        for (int l = 1; l <= len; ++l)
            h[static_cast<size_t>(l)] += q[i] * h[static_cast<size_t>(l) - 1];
    Cplx sum(0.0, 0.0);
    double weight = 1.0;  // (m-1)! / (l+m-1)!
    Cplx zl(1.0, 0.0);
    for (int l = 0; l <= len; ++l) {
        sum += f_base.coeff(l + m - 1) * h[static_cast<size_t>(l)] * weight * zl;
        weight /= static_cast<double>(l + m);
        zl *= z;
    }
    return sum;
}

Cplx extremal_series(const EntireFunction& f_base, const FrequencyTuple& q, Cplx z,
                     double tol) {
    const int m = q.size();
    const Cplx s = extremal_series_factor(f_base, q, z, tol);
    const GammaProfile profile = gamma_profile(q);
    const LogComplex det = vdm_det(q);
    const LogComplex z_pow = LogComplex::from(z).pow(m - 1);
    // gamma e^{i arg det} z^{m-1} / (m-1)!, assembled in log scale; the
    // linear view saturates to 0 below roughly m = 180 factorials.
    const LogComplex prefactor = LogComplex::from_polar(
        profile.log_gamma_min + z_pow.log_mag - std::lgamma(static_cast<double>(m)),
        det.phase + z_pow.phase);
    return prefactor.value() * s;
}

double sup_norm_disk(const FPolynomial& f, double r, int samples, double inflation) {
    double mx = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * M_PI * i / samples;
        mx = std::max(mx, std::abs(f.evaluate(std::polar(r, t))));
    }
    return mx * inflation;
}

double extremal_sup_norm(const EntireFunction& f_base, const FrequencyTuple& q,
                         double r, int samples, double inflation) {
    double mx = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * M_PI * i / samples;
        mx = std::max(mx, std::abs(extremal_series(f_base, q, std::polar(r, t))));
    }
    return mx * inflation;
}

}  // namespace fpade
