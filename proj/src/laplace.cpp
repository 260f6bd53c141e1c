#include "fpade/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace fpade {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kPanels = 8192;
constexpr double kTvGuard = 1.005;
constexpr double kNodeBranch = 1e-8;

Cplx pos_pow(Cplx z, int n) {
    Cplx acc(1.0, 0.0);
    Cplx base = z;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// Periodic rectangle rule for int_0^{2pi} f(theta) dtheta.
Cplx ring_sum(const std::function<Cplx(double)>& f, int n) {
    Cplx acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) acc += f(kTwoPi * k / n);
    return acc * (kTwoPi / n);
}

// Ring rule with doubling until the value settles; throws when the cap is
// reached first.
Cplx ring_converge(const std::function<Cplx(double)>& f, double tol, int n_start,
                   int n_cap) {
    Cplx prev = ring_sum(f, n_start);
    for (int n = 2 * n_start; n <= n_cap; n *= 2) {
        const Cplx cur = ring_sum(f, n);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureNonConvergent("circle quadrature failed to settle");
}

double simpson_panel(double h, double fa, double fm, double fb) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Adaptive Simpson on [a, b] with a uniform seed partition so narrow peaks
// are never skipped.  Returns false when the split budget ran out; the value
// is still the best available estimate.
bool adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                      double tol_abs, double& out) {
    struct Node {
        double a, b, fa, fm, fb, s, tol;
    };
    const int seeds = 64;
    const long long budget = 400000;
    long long splits = 0;
    bool ok = true;
    double total = 0.0;
    std::vector<Node> stack;
    for (int i = seeds - 1; i >= 0; --i) {
        Node n;
        n.a = a + (b - a) * i / seeds;
        n.b = a + (b - a) * (i + 1) / seeds;
        n.fa = f(n.a);
        n.fb = f(n.b);
        n.fm = f(0.5 * (n.a + n.b));
        n.s = simpson_panel(n.b - n.a, n.fa, n.fm, n.fb);
        n.tol = tol_abs / seeds;
        stack.push_back(n);
    }
    while (!stack.empty()) {
        const Node n = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (n.a + n.b);
        const double flm = f(0.5 * (n.a + mid));
        const double frm = f(0.5 * (mid + n.b));
        const double sl = simpson_panel(mid - n.a, n.fa, flm, n.fm);
        const double sr = simpson_panel(n.b - mid, n.fm, frm, n.fb);
        ++splits;
        const double err = sl + sr - n.s;
        // Acceptance floor at the panel's own rounding scale, so evaluation
        // noise on large integrand values cannot force endless splitting.
        const double fscale =
            std::max({std::abs(n.fa), std::abs(n.fm), std::abs(n.fb)});
        const double floor_tol = 1e-14 * (n.b - n.a) * fscale;
        if (std::abs(err) < 15.0 * std::max(n.tol, floor_tol) || n.b - n.a < 1e-13) {
            total += sl + sr + err / 15.0;
        } else if (splits > budget) {
            total += sl + sr;
            ok = false;
        } else {
            stack.push_back(Node{mid, n.b, n.fm, frm, n.fb, sr, n.tol / 2.0});
            stack.push_back(Node{n.a, mid, n.fa, flm, n.fm, sl, n.tol / 2.0});
        }
    }
    out = total;
    return ok;
}

// c_i = int l_i dmu for the Lagrange basis of the node tuple.  Exact sums
// for atoms; a fixed-panel ring rule with one doubling check for densities.
std::vector<Cplx> lagrange_coefficients(const SpectralMeasure& mu,
                                        const FrequencyTuple& nodes, double tol) {
    const int m = nodes.size();
    const LagrangeSystem ls(nodes);
    std::vector<Cplx> c(static_cast<size_t>(m), Cplx(0.0, 0.0));
    if (mu.is_atomic()) {
        for (size_t k = 0; k < mu.locations().size(); ++k) {
            const std::vector<Cplx> w = ls.weights(mu.locations()[k]);
            for (int i = 0; i < m; ++i)
                c[static_cast<size_t>(i)] += mu.masses()[k] * w[static_cast<size_t>(i)];
        }
        return c;
    }
    auto pass = [&](int n) {
        std::vector<Cplx> acc(static_cast<size_t>(m), Cplx(0.0, 0.0));
        for (int k = 0; k < n; ++k) {
            const double theta = kTwoPi * k / n;
            const Cplx zeta(std::cos(theta), std::sin(theta));
            const Cplx chi = mu.density_value(theta);
            const std::vector<Cplx> w = ls.weights(zeta);
            for (int i = 0; i < m; ++i) acc[static_cast<size_t>(i)] += chi * w[static_cast<size_t>(i)];
        }
        for (Cplx& v : acc) v *= kTwoPi / n;
        return acc;
    };
    const std::vector<Cplx> coarse = pass(kPanels);
    std::vector<Cplx> fine = pass(2 * kPanels);
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < m; ++i) {
        diff = std::max(diff, std::abs(fine[static_cast<size_t>(i)] - coarse[static_cast<size_t>(i)]));
        scale = std::max(scale, std::abs(fine[static_cast<size_t>(i)]));
    }
    if (diff > tol * (1.0 + scale))
        throw QuadratureNonConvergent("Lagrange coefficient quadrature failed to settle");
    return fine;
}

}  // namespace

SpectralMeasure SpectralMeasure::atomic(std::vector<Cplx> locations,
                                        std::vector<Cplx> masses) {
    if (locations.empty() || locations.size() != masses.size())
        throw DomainError("atoms need matching nonempty location and mass lists");
    SpectralMeasure mu;
    mu.atomic_ = true;
    mu.locations_ = std::move(locations);
    mu.masses_ = std::move(masses);
    return mu;
}

SpectralMeasure SpectralMeasure::circle_density(std::map<int, Cplx> fourier) {
    if (fourier.empty()) throw DomainError("density needs at least one coefficient");
    SpectralMeasure mu;
    mu.atomic_ = false;
    mu.fourier_ = std::move(fourier);
    return mu;
}

SpectralMeasure SpectralMeasure::from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad measure JSON: ") + e.what());
    }
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "atomic") {
            std::vector<Cplx> locs;
            std::vector<Cplx> masses;
            for (const auto& atom : j.at("atoms")) {
                const auto& l = atom.at("loc");
                const auto& ms = atom.at("mass");
                locs.emplace_back(l.at(0).get<double>(), l.at(1).get<double>());
                masses.emplace_back(ms.at(0).get<double>(), ms.at(1).get<double>());
            }
            return atomic(std::move(locs), std::move(masses));
        }
        if (kind == "fourier") {
            std::map<int, Cplx> coeffs;
            for (const auto& item : j.at("coeffs").items())
                coeffs[std::stoi(item.key())] =
                    Cplx(item.value().at(0).get<double>(), item.value().at(1).get<double>());
            return circle_density(std::move(coeffs));
        }
        throw ConfigError("unknown measure kind: " + kind);
    } catch (const ConfigError&) {
        throw;
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad measure JSON: ") + e.what());
    }
}

Cplx SpectralMeasure::density_value(double theta) const {
    if (atomic_) throw DomainError("atomic measures have no pointwise density");
    Cplx acc(0.0, 0.0);
    for (const auto& [n, coeff] : fourier_)
        acc += coeff * Cplx(std::cos(n * theta), std::sin(n * theta));
    return acc;
}

Cplx SpectralMeasure::moment(int n) const {
    if (atomic_) {
        Cplx acc(0.0, 0.0);
        for (size_t k = 0; k < locations_.size(); ++k) {
            if (n >= 0) {
                acc += masses_[k] * pos_pow(locations_[k], n);
            } else {
                if (locations_[k] == Cplx(0.0, 0.0))
                    throw DomainError("negative moment of an atom at zero");
                acc += masses_[k] / pos_pow(locations_[k], -n);
            }
        }
        return acc;
    }
    const auto it = fourier_.find(-n);
    return it == fourier_.end() ? Cplx(0.0, 0.0) : kTwoPi * it->second;
}

Cplx SpectralMeasure::integrate(const std::function<Cplx(Cplx)>& phi, double tol) const {
    if (atomic_) {
        Cplx acc(0.0, 0.0);
        for (size_t k = 0; k < locations_.size(); ++k) acc += masses_[k] * phi(locations_[k]);
        return acc;
    }
    auto f = [&](double theta) {
        return phi(Cplx(std::cos(theta), std::sin(theta))) * density_value(theta);
    };
    const Cplx coarse = ring_sum(f, kPanels);
    const Cplx fine = ring_sum(f, 2 * kPanels);
    if (std::abs(fine - coarse) > tol * (1.0 + std::abs(fine)))
        throw QuadratureNonConvergent("measure quadrature failed to settle");
    return fine;
}

double SpectralMeasure::total_variation() const {
    if (atomic_) {
        double acc = 0.0;
        for (const Cplx& mass : masses_) acc += std::abs(mass);
        return acc;
    }
    auto f = [&](double theta) { return Cplx(std::abs(density_value(theta)), 0.0); };
    const Cplx coarse = ring_sum(f, kPanels);
    const Cplx fine = ring_sum(f, 2 * kPanels);
    if (std::abs(fine - coarse) > 1e-6 * (1.0 + std::abs(fine)))
        throw QuadratureNonConvergent("total variation quadrature failed to settle");
    return fine.real() * kTvGuard;
}

LagrangeSystem::LagrangeSystem(FrequencyTuple nodes) : nodes_(std::move(nodes)) {
    const int m = nodes_.size();
    denominators_.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        LogComplex d = LogComplex::one();
        for (int j = 0; j < m; ++j)
            if (j != i) d = d * LogComplex::from(nodes_[i] - nodes_[j]);
        denominators_.push_back(d);
    }
}

std::vector<Cplx> LagrangeSystem::weights(Cplx z) const {
    const int m = nodes_.size();
    std::vector<LogComplex> pre(static_cast<size_t>(m) + 1, LogComplex::one());
    std::vector<LogComplex> suf(static_cast<size_t>(m) + 1, LogComplex::one());
    for (int i = 0; i < m; ++i) pre[static_cast<size_t>(i) + 1] = pre[static_cast<size_t>(i)] * LogComplex::from(z - nodes_[i]);
    for (int i = m - 1; i >= 0; --i) suf[static_cast<size_t>(i)] = suf[static_cast<size_t>(i) + 1] * LogComplex::from(z - nodes_[i]);
    std::vector<Cplx> w(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        w[static_cast<size_t>(i)] =
            (pre[static_cast<size_t>(i)] * suf[static_cast<size_t>(i) + 1] / denominators_[static_cast<size_t>(i)]).value();
    return w;
}

std::vector<Cplx> roots_of_unity_lagrange(int m, Cplx z) {
    if (m < 1) throw DomainError("node count must be >= 1");
    if (m == 1) return {Cplx(1.0, 0.0)};
    const Cplx zm = pos_pow(z, m);
    std::vector<Cplx> w(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = kTwoPi * j / m;
        const Cplx zeta(std::cos(t), std::sin(t));
        const Cplx u = z * std::conj(zeta);
        if (std::abs(u - Cplx(1.0, 0.0)) < kNodeBranch) {
            Cplx acc(0.0, 0.0);
            Cplx p(1.0, 0.0);
            for (int k = 0; k < m; ++k) {
                acc += p;
                p *= u;
            }
            w[static_cast<size_t>(j)] = acc / static_cast<double>(m);
        } else {
            w[static_cast<size_t>(j)] =
                (zm - Cplx(1.0, 0.0)) / (static_cast<double>(m) * (u - Cplx(1.0, 0.0)));
        }
    }
    return w;
}

Cplx laplace_transform(const SpectralMeasure& mu, const EntireFunction& f_base, Cplx z,
                       double tol) {
    return mu.integrate([&](Cplx zeta) { return f_base.evaluate(z * zeta, tol); }, tol);
}

HoloFunction laplace_holo(const SpectralMeasure& mu, const EntireFunction& f_base) {
    auto mu_p = std::make_shared<SpectralMeasure>(mu);
    auto f_p = std::make_shared<EntireFunction>(f_base);
    // g(z) = sum_n F_n mu_n z^n / n!, so the n-th derivative at 0 is F_n mu_n.
    auto deriv = [mu_p, f_p](int n) { return f_p->coeff(n) * mu_p->moment(n); };
    auto eval = [mu_p, f_p](Cplx z) { return laplace_transform(*mu_p, *f_p, z); };
    return HoloFunction(deriv, 1e12, "laplace(" + f_base.name() + ")", eval);
}

FPolynomial interpolate_laplace(const SpectralMeasure& mu, const EntireFunction& f_base,
                                const FrequencyTuple& nodes) {
    return FPolynomial(f_base, nodes, lagrange_coefficients(mu, nodes, 1e-9));
}

double lambda_functional(const SpectralMeasure& mu, const FrequencyTuple& nodes) {
    const std::vector<Cplx> c = lagrange_coefficients(mu, nodes, 1e-9);
    double acc = 0.0;
    for (const Cplx& v : c) acc += std::abs(v);
    return acc;
}

double dirac_lambda(int m) {
    const std::vector<Cplx> w = roots_of_unity_lagrange(m, Cplx(-1.0, 0.0));
    double acc = 0.0;
    for (const Cplx& v : w) acc += std::abs(v);
    return acc;
}

double dirac_lambda_rotated(int m) {
    // Nodes -Q_m with the atom at -1: the Lagrange basis of the negated set
    // at -1 equals the roots-of-unity basis at +1.
    const std::vector<Cplx> w = roots_of_unity_lagrange(m, Cplx(1.0, 0.0));
    double acc = 0.0;
    for (const Cplx& v : w) acc += std::abs(v);
    return acc;
}

std::vector<LambdaRow> lambda_limit_abs(const SpectralMeasure& chi,
                                        const std::vector<int>& m_list, int support_cap) {
    if (chi.is_atomic()) throw DomainError("limit table needs a density measure");
    if (m_list.empty()) throw DomainError("order list must not be empty");
    for (const auto& [n, coeff] : chi.fourier())
        if (std::abs(n) > support_cap)
            throw AbsHypothesisViolated("Fourier support exceeds the cap");
    auto hat = [&](int n) -> Cplx {
        const auto it = chi.fourier().find(n);
        return it == chi.fourier().end() ? Cplx(0.0, 0.0) : it->second;
    };
    // The limit integrand: the full nonpositive-frequency part of chi.
    auto minus_part = [&](double theta) {
        Cplx acc(0.0, 0.0);
        for (const auto& [n, coeff] : chi.fourier())
            if (n <= 0) acc += coeff * Cplx(std::cos(n * theta), std::sin(n * theta));
        return acc;
    };
    const Cplx limit_c = ring_converge(
        [&](double theta) { return Cplx(std::abs(minus_part(theta)), 0.0); }, 1e-11, 256,
        1 << 21);
    const double limit = limit_c.real();
    std::vector<LambdaRow> rows;
    rows.reserve(m_list.size());
    for (int m : m_list) {
        if (m < 1) throw DomainError("orders must be >= 1");
        double lambda = 0.0;
        for (int j = 0; j < m; ++j) {
            Cplx acc(0.0, 0.0);
            for (int k = 0; k < m; ++k) {
                const Cplx coeff = hat(-k);
                if (coeff == Cplx(0.0, 0.0)) continue;
                // zeta_j^{-k} with the angle reduced mod 2 pi for stability.
                const double t = -kTwoPi * ((static_cast<long long>(j) * k) % m) / m;
                acc += coeff * Cplx(std::cos(t), std::sin(t));
            }
            lambda += std::abs(acc);
        }
        lambda *= kTwoPi / m;
        LambdaRow row;
        row.m = m;
        row.lambda = lambda;
        row.limit = limit;
        row.abs_diff = std::abs(lambda - limit);
        rows.push_back(row);
    }
    return rows;
}

ChiRResult chi_r_family(double r, int m) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("the family needs 0 < r < 1");
    if (m < 1) throw DomainError("node count must be >= 1");
    ChiRResult res;
    res.r = r;
    res.m = m;
    // Lambda(Q_m): partial sums 2 + sum_{k=1}^{m-1} (r w)^k at w = zeta_j^{-1}
    // by the closed geometric form.
    double lambda = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = -kTwoPi * j / m;
        const Cplx rw = r * Cplx(std::cos(t), std::sin(t));
        const Cplx partial =
            m == 1 ? Cplx(0.0, 0.0) : rw * (Cplx(1.0, 0.0) - pos_pow(rw, m - 1)) / (Cplx(1.0, 0.0) - rw);
        lambda += std::abs(Cplx(2.0, 0.0) + partial);
    }
    res.lambda = lambda * kTwoPi / m;
    // Cancellation-free forms via 1 - cos(theta) = 2 sin^2(theta/2): near the
    // theta = 0 peak the naive numerator and denominator both lose ten digits.
    auto chi = [&](double theta) {
        const double s = std::sin(0.5 * theta);
        const double s2 = s * s;
        return std::abs((2.0 * (1.0 - r) + 4.0 * r * s2) /
                        ((1.0 - r) * (1.0 - r) + 4.0 * r * s2));
    };
    auto chi_minus = [&](double theta) {
        const double s = std::sin(0.5 * theta);
        const Cplx den(1.0 - r + 2.0 * r * s * s, r * std::sin(theta));
        return std::abs(Cplx(1.0, 0.0) + Cplx(1.0, 0.0) / den);
    };
    const bool ok1 = adaptive_simpson(chi, 0.0, kTwoPi, 1e-8, res.l1_chi);
    const bool ok2 = adaptive_simpson(chi_minus, 0.0, kTwoPi, 1e-8, res.l1_chi_minus);
    res.quadrature_converged = ok1 && ok2;
    return res;
}

}  // namespace fpade
