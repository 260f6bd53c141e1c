#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fpade/interpolation.hpp"
#include "fpade/series.hpp"
#include "fpade/vandermonde.hpp"
#include "oracles.hpp"

using fpade::Cplx;
using fpade::EntireFunction;
using fpade::FPolynomial;
using fpade::FrequencyTuple;
using fpade::GammaProfile;
using fpade::HoloFunction;
using fpade::TqBounds;

namespace {

FrequencyTuple roots_of_unity(int m) {
    std::vector<Cplx> pts;
    for (int j = 0; j < m; ++j)
        pts.push_back(std::polar(1.0, 2.0 * 3.14159265358979323846 * j / m));
    return FrequencyTuple(std::move(pts));
}

}  // namespace

TEST_CASE("combination of dilated base functions evaluates termwise") {
    const EntireFunction F = EntireFunction::exp_function();
    const FrequencyTuple q({Cplx(1.0, 0.0), Cplx(0.0, 1.0)});
    const FPolynomial f(F, q, {Cplx(2.0, 0.0), Cplx(0.0, -3.0)});
    CHECK(f.order() == 2);
    CHECK(f.norm_inf() == 3.0);
    CHECK(f.norm_one() == 5.0);
    const Cplx z(0.4, -0.6);
    const Cplx want = 2.0 * std::exp(z) + Cplx(0.0, -3.0) * std::exp(Cplx(0.0, 1.0) * z);
    CHECK(oracles::rel_diff(f.evaluate(z), want) < 1e-12);
    CHECK(oracles::rel_diff(f.derivative_at_zero(0), Cplx(2.0, -3.0)) < 1e-14);
    CHECK(oracles::rel_diff(f.derivative_at_zero(1), Cplx(5.0, 0.0)) < 1e-14);
    CHECK(oracles::rel_diff(f.derivative_at_zero(2), Cplx(2.0, 3.0)) < 1e-14);
    CHECK_THROWS_AS(FPolynomial(F, q, {Cplx(1.0, 0.0)}), fpade::DomainError);
}

TEST_CASE("interpolant matches the derivative data it was built from") {
    std::mt19937_64 rng(101);
    const HoloFunction g = HoloFunction::geometric(2.0);
    const EntireFunction F = EntireFunction::exp_function();
    for (int m : {4, 8, 12}) {
        const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
        const FPolynomial f = fpade::interpolate(g, F, q);
        for (int n = 0; n < m; ++n) {
            const Cplx want = g.derivative(n);
            const double scale = std::max(1.0, std::abs(want));
            CHECK(std::abs(f.derivative_at_zero(n) - want) < 1e-7 * scale);
        }
    }
}

TEST_CASE("polynomial data below the order is reproduced to near machine level") {
    std::mt19937_64 rng(107);
    const HoloFunction g =
        HoloFunction::polynomial({Cplx(-5.0, 0.0), Cplx(2.0, 0.0), Cplx(0.0, 0.0), Cplx(1.0, 0.0)});
    const EntireFunction F = EntireFunction::exp_function();
    for (int m : {4, 8}) {
        for (int trial = 0; trial < 3; ++trial) {
            const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
            const FPolynomial f = fpade::interpolate(g, F, q);
            for (int n = 0; n < m; ++n)
                CHECK(std::abs(f.derivative_at_zero(n) - g.derivative(n)) < 1e-9 * 6.0);
        }
    }
}

TEST_CASE("single-frequency interpolation is a pure rescaling") {
    const FPolynomial f = fpade::interpolate(HoloFunction::geometric(2.0),
                                             EntireFunction::exp_function(),
                                             FrequencyTuple({Cplx(0.5, 0.0)}));
    REQUIRE(f.order() == 1);
    CHECK(oracles::rel_diff(f.coefficients()[0], Cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("interpolation reports the conditioning flag for clustered tuples") {
    std::vector<Cplx> pts;
    for (int j = 0; j < 12; ++j) pts.emplace_back(1.0 + 1e-3 * j, 0.0);
    bool warn = false;
    fpade::interpolate(HoloFunction::geometric(4.0), EntireFunction::exp_function(),
                       FrequencyTuple(std::move(pts)), &warn);
    CHECK(warn);
}

TEST_CASE("distance-product profile on roots of unity") {
    for (int m : {3, 6, 12}) {
        const GammaProfile gp = fpade::gamma_profile(roots_of_unity(m));
        const double want = std::log(static_cast<double>(m));
        for (double lg : gp.log_gamma_j) CHECK(std::abs(lg - want) < 1e-12);
        CHECK(std::abs(gp.log_gamma_min - want) < 1e-12);
    }
}

TEST_CASE("distance products multiply to the squared determinant") {
    std::mt19937_64 rng(113);
    for (int m : {2, 5, 9}) {
        const FrequencyTuple q(oracles::random_points(m, 0.2, rng));
        const GammaProfile gp = fpade::gamma_profile(q);
        double total = 0.0;
        for (double lg : gp.log_gamma_j) total += lg;
        CHECK(std::abs(total - 2.0 * fpade::vdm_det(q).log_mag) < 1e-9);
    }
}

TEST_CASE("operator norm brackets in closed form on roots of unity") {
    const int m = 8;
    const TqBounds b =
        fpade::operator_bounds(EntireFunction::exp_function(), roots_of_unity(m));
    const double lg = std::lgamma(static_cast<double>(m));
    const double logm = std::log(static_cast<double>(m));
    CHECK(std::abs(b.t.log_lo - (lg - logm)) < 1e-12);
    CHECK(std::abs(b.t.log_hi - (1.0 + lg - logm)) < 1e-12);
    CHECK(std::abs(b.eps.log_lo - (-1.0 + logm - lg)) < 1e-12);
    CHECK(std::abs(b.eps.log_hi - (1.0 + logm - lg)) < 1e-12);
    CHECK(b.t.log_lo <= b.t.log_hi);
    CHECK(b.eps.log_lo <= b.eps.log_hi);
}

TEST_CASE("error bound formula and domain checks") {
    const HoloFunction g = HoloFunction::geometric(2.0);
    const EntireFunction F = EntireFunction::exp_function();
    const FrequencyTuple q = roots_of_unity(4);
    const Cplx z(0.3, 0.2);
    const double r = 1.5;
    const double got = fpade::error_bound(g, q, F, z, r);
    const double sup = g.sup_on_circle(r) * 1.01;
    const double want =
        std::pow(std::abs(z) / r, 4) *
        (r / (r - std::abs(z)) + 1.0 * std::exp(2.0 * 1.0 * r)) * sup;
    CHECK(oracles::rel_diff(got, want) < 1e-12);
    CHECK_THROWS_AS(fpade::error_bound(g, q, F, Cplx(1.5, 0.0), 1.5), fpade::DomainError);
    CHECK_THROWS_AS(fpade::error_bound(g, q, F, Cplx(0.1, 0.0), 2.5), fpade::DomainError);

    // The bound really does dominate the observed error at a sample point.
    const FPolynomial f = fpade::interpolate(g, F, q);
    CHECK(std::abs(g.evaluate(z) - f.evaluate(z)) <= got + 1e-8);
}

TEST_CASE("norm-one extremal combination annihilates the low jet") {
    std::mt19937_64 rng(127);
    const EntireFunction F = EntireFunction::exp_function();
    for (int m : {3, 6, 10}) {
        const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
        const GammaProfile gp = fpade::gamma_profile(q);
        const FPolynomial f = fpade::extremal_fpoly(F, q);
        CHECK(std::abs(f.norm_inf() - 1.0) < 1e-12);
        for (const Cplx& c : f.coefficients()) CHECK(std::abs(c) <= 1.0 + 1e-12);
        for (int n = 0; n + 1 < m; ++n) CHECK(std::abs(f.derivative_at_zero(n)) < 1e-10);
        CHECK(oracles::rel_diff(std::abs(f.derivative_at_zero(m - 1)),
                                std::exp(gp.log_gamma_min)) < 1e-10);
    }
}

TEST_CASE("series route for the extremal combination matches the coefficient route") {
    std::mt19937_64 rng(131);
    const EntireFunction F = EntireFunction::exp_function();
    for (int m : {4, 6, 8}) {
        const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
        const FPolynomial f = fpade::extremal_fpoly(F, q);
        for (int t = 0; t < 5; ++t) {
            const Cplx z = std::polar(0.2 + 0.26 * t, 1.7 * t);
            CHECK(std::abs(fpade::extremal_series(F, q, z) - f.evaluate(z)) <
                  1e-8 * std::max(1e-12, std::abs(f.evaluate(z))) + 1e-14);
        }
    }
}

TEST_CASE("series factor splits off the explicit prefactor") {
    std::mt19937_64 rng(137);
    const EntireFunction F = EntireFunction::exp_function();
    const int m = 5;
    const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
    const GammaProfile gp = fpade::gamma_profile(q);
    const double phase = fpade::vdm_det(q).phase;
    for (const Cplx z : {Cplx(0.6, -0.3), Cplx(-1.1, 0.9), Cplx(0.0, 1.4)}) {
        const Cplx pre = std::exp(gp.log_gamma_min) * std::polar(1.0, phase) *
                         std::pow(z, m - 1) / std::tgamma(static_cast<double>(m));
        const Cplx whole = fpade::extremal_series(F, q, z);
        const Cplx split = pre * fpade::extremal_series_factor(F, q, z);
        CHECK(std::abs(whole - split) < 1e-12 * std::max(1.0, std::abs(whole)));
    }
    CHECK(oracles::rel_diff(fpade::extremal_series_factor(F, q, Cplx(0.0, 0.0)),
                            Cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("interpolating the critical monomial realizes the lower operator bound") {
    std::mt19937_64 rng(139);
    for (int m : {2, 5, 9}) {
        const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
        const GammaProfile gp = fpade::gamma_profile(q);
        const EntireFunction F = EntireFunction::exp_function();
        const FPolynomial w = fpade::interpolate(HoloFunction::monomial(m - 1), F, q);
        const double want = std::exp(std::lgamma(static_cast<double>(m)) - gp.log_gamma_min);
        CHECK(oracles::rel_diff(w.norm_inf(), want) < 1e-9);
        const TqBounds b = fpade::operator_bounds(F, q);
        const double lw = std::log(w.norm_inf());
        CHECK(lw >= b.t.log_lo - 1e-9);
        CHECK(lw <= b.t.log_hi + 1e-9);
    }
}

TEST_CASE("witness sits strictly inside the bracket for a mid-band base") {
    // Coefficients 1, 2, 1.5, 1.5, ... give bound 2 but F_2 = 1.5, so the
    // m = 3 witness (m-1)!/(gamma |F_2|) is strictly between the endpoints.
    const EntireFunction F = EntireFunction::from_coefficient_list(
        {Cplx(1.0, 0.0), Cplx(2.0, 0.0), Cplx(1.5, 0.0)});
    std::mt19937_64 rng(149);
    const FrequencyTuple q(oracles::random_points(3, 0.3, rng));
    const fpade::GammaProfile gp = fpade::gamma_profile(q);
    const FPolynomial w = fpade::interpolate(HoloFunction::monomial(2), F, q);
    const double want = std::exp(std::log(2.0) - gp.log_gamma_min - std::log(1.5));
    CHECK(oracles::rel_diff(w.norm_inf(), want) < 1e-9);
    const TqBounds b = fpade::operator_bounds(F, q);
    const double lw = std::log(w.norm_inf());
    CHECK(lw > b.t.log_lo + 1e-6);
    CHECK(lw < b.t.log_hi - 1e-6);
}

TEST_CASE("sampled sup of the extremal combination obeys the eps bracket") {
    std::mt19937_64 rng(151);
    const EntireFunction F = EntireFunction::exp_function();
    for (int m : {3, 7, 12}) {
        const FrequencyTuple q(oracles::random_points(m, 0.25, rng));
        const TqBounds b = fpade::operator_bounds(F, q);
        const double sampled = fpade::extremal_sup_norm(F, q, 1.0, 4096, 1.0);
        const double ls = std::log(sampled);
        CHECK(ls >= b.eps.log_lo - 1e-9);
        CHECK(ls <= b.eps.log_hi + 1e-6);
    }
}

TEST_CASE("sup over a circle of a single dilated exponential") {
    const EntireFunction F = EntireFunction::exp_function();
    const Cplx qpt(0.7, 0.3);
    const FPolynomial f(F, FrequencyTuple({qpt}), {Cplx(2.0, -1.0)});
    const double r = 1.3;
    const double want = std::abs(Cplx(2.0, -1.0)) * std::exp(std::abs(qpt) * r);
    CHECK(oracles::rel_diff(fpade::sup_norm_disk(f, r, 4096, 1.0), want) < 1e-5);
}
