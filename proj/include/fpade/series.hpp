#ifndef FPADE_SERIES_HPP
#define FPADE_SERIES_HPP

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fpade/errors.hpp"

namespace fpade {

using Cplx = std::complex<double>;

// Entire function F(z) = sum_n F_n z^n / n! given by its Taylor coefficients
// F_n, which are required to satisfy 1 <= |F_n| <= gamma_bound.  coeff(n)
// validates the band on every call and throws AbsHypothesisViolated outside it.
class EntireFunction {
  public:
    using CoeffFn = std::function<Cplx(int)>;

    EntireFunction(CoeffFn coeff, double gamma_bound, std::string name);

    // F_n, validated against the [1, gamma] band.
    Cplx coeff(int n) const;
    double gamma() const { return gamma_; }
    const std::string& name() const { return name_; }

    // F(z) by truncated Taylor sum; the truncation order N is chosen so the
    // tail bound gamma |z|^{N+1} / ((N+1)! (1 - |z|/(N+2))) < tol, evaluated
    // in log scale so large |z| cannot overflow the test.
    Cplx evaluate(Cplx z, double tol = 1e-15) const;

    // F(q z): single dilation term.
    Cplx evaluate_dilation(Cplx q, Cplx z, double tol = 1e-15) const;

    // Truncation order used by evaluate() for a given |z| and tolerance.
    static int truncation_order(double abs_z, double gamma_bound, double tol);

    // Stock families.
    static EntireFunction exp_function();                       // F_n = 1
    static EntireFunction alternating();                        // F_n = (-1)^n
    static EntireFunction oscillatory(double omega);            // F_n = e^{i n omega}
    // Finite list, repeating the last entry for all higher indices.
    static EntireFunction from_coefficient_list(std::vector<Cplx> coeffs);
    // Coefficient-wise sum F_n + G_n with gamma = gamma_F + gamma_G.  The
    // lower bound |F_n + G_n| >= 1 is the caller's business; violations
    // surface as BoundViolation on access, like any other band breach.
    static EntireFunction sum(const EntireFunction& a, const EntireFunction& b);
    // Coefficient-wise scaling c F_n for real c >= 1 (keeps the lower bound).
    static EntireFunction scaled(const EntireFunction& a, double factor);
    // Parse "exp", "alt", "osc:<omega>", or "custom:<json path>".
    static EntireFunction parse(const std::string& descriptor);

  private:
    CoeffFn coeff_;
    double gamma_;
    std::string name_;
};

// Target function g, holomorphic on a disk |z| < radius, described by its
// derivatives at 0.  An optional closed-form evaluator is carried alongside
// for tests that compare interpolants against exact values.
class HoloFunction {
  public:
    using DerivFn = std::function<Cplx(int)>;  // g^{(n)}(0)
    using EvalFn = std::function<Cplx(Cplx)>;

    HoloFunction(DerivFn deriv, double radius, std::string name, EvalFn eval = nullptr);

    Cplx derivative(int n) const { return deriv_(n); }
    double radius() const { return radius_; }
    const std::string& name() const { return name_; }
    bool has_evaluator() const { return static_cast<bool>(eval_); }
    Cplx evaluate(Cplx z) const;

    // max |g| on |z| = r by dense sampling (throws if r >= radius).
    double sup_on_circle(double r, int samples = 4096) const;

    // g(z) = 1 / (1 - z/R), radius R, g^{(n)}(0) = n! / R^n.
    static HoloFunction geometric(double pole_radius);
    // g(z) = e^{a z}, entire.
    static HoloFunction exp_dilation(Cplx a);
    // Polynomial with given coefficients (entire).
    static HoloFunction polynomial(std::vector<Cplx> coeffs);
    // g(z) = z^k.
    static HoloFunction monomial(int k);
    // Parse "geometric:<R>", "exp:<a>" (real a), "monomial:<k>", or
    // "poly:<c0>,<c1>,..." (real coefficients).
    static HoloFunction parse(const std::string& descriptor);

  private:
    DerivFn deriv_;
    double radius_;
    std::string name_;
    EvalFn eval_;
};

}  // namespace fpade

#endif
