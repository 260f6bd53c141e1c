#include "fpade/series.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace fpade {

namespace {

// log of the tail majorant Gamma |z|^{N+1} / ((N+1)! (1 - |z|/(N+2))),
// defined only for N + 2 > |z|.
double log_tail_bound(int n, double abs_z, double gamma_bound) {
    if (abs_z == 0.0) return -std::numeric_limits<double>::infinity();
    const double ratio = abs_z / (n + 2.0);
    return std::log(gamma_bound) + (n + 1.0) * std::log(abs_z) -
           std::lgamma(n + 2.0) - std::log1p(-ratio);
}

}  // namespace

EntireFunction::EntireFunction(CoeffFn coeff, double gamma_bound, std::string name)
    : coeff_(std::move(coeff)), gamma_(gamma_bound), name_(std::move(name)) {
    if (!(gamma_ >= 1.0)) throw DomainError("coefficient bound must be >= 1");
}

Cplx EntireFunction::coeff(int n) const {
    if (n < 0) throw DomainError("negative coefficient index");
    const Cplx v = coeff_(n);
    const double a = std::abs(v);
    // The band check is exact at the ends the stock families hit (|F_n| = 1),
    // so allow only rounding-level slack.
    if (a < 1.0 - 1e-12 || a > gamma_ * (1.0 + 1e-12))
        throw BoundViolation("|F_" + std::to_string(n) + "| = " + std::to_string(a) +
                             " outside [1, " + std::to_string(gamma_) + "] for " + name_);
    return v;
}

int EntireFunction::truncation_order(double abs_z, double gamma_bound, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    int n = 0;
    while (n + 2.0 <= abs_z || log_tail_bound(n, abs_z, gamma_bound) >= std::log(tol)) {
        ++n;
        if (n > 100000) throw NonConvergent("truncation order exceeded 1e5");
    }
    return n;
}

Cplx EntireFunction::evaluate(Cplx z, double tol) const {
    const int n_max = truncation_order(std::abs(z), gamma_, tol);
    Cplx sum = coeff(0);
    Cplx term(1.0, 0.0);  // z^n / n!
    for (int n = 1; n <= n_max; ++n) {
        term *= z / static_cast<double>(n);
        sum += coeff(n) * term;
    }
    return sum;
}

Cplx EntireFunction::evaluate_dilation(Cplx q, Cplx z, double tol) const {
    return evaluate(q * z, tol);
}

EntireFunction EntireFunction::exp_function() {
    return EntireFunction([](int) { return Cplx(1.0, 0.0); }, 1.0, "exp");
}

EntireFunction EntireFunction::alternating() {
    return EntireFunction([](int n) { return Cplx(n % 2 == 0 ? 1.0 : -1.0, 0.0); }, 1.0,
                          "alt");
}

EntireFunction EntireFunction::oscillatory(double omega) {
    std::ostringstream name;
    name << "osc:" << omega;
    return EntireFunction(
        [omega](int n) { return std::polar(1.0, omega * static_cast<double>(n)); }, 1.0,
        name.str());
}

EntireFunction EntireFunction::from_coefficient_list(std::vector<Cplx> coeffs) {
    if (coeffs.empty()) throw DomainError("coefficient list must be nonempty");
    double gamma_bound = 1.0;
    for (const Cplx& c : coeffs) gamma_bound = std::max(gamma_bound, std::abs(c));
    auto shared = std::make_shared<std::vector<Cplx>>(std::move(coeffs));
    return EntireFunction(
        [shared](int n) {
            const size_t i = std::min(static_cast<size_t>(n), shared->size() - 1);
            return (*shared)[i];
        },
        gamma_bound, "custom");
}

EntireFunction EntireFunction::sum(const EntireFunction& a, const EntireFunction& b) {
    auto fa = a.coeff_;
    auto fb = b.coeff_;
    return EntireFunction([fa, fb](int n) { return fa(n) + fb(n); },
                          a.gamma_ + b.gamma_, a.name_ + "+" + b.name_);
}

EntireFunction EntireFunction::scaled(const EntireFunction& a, double factor) {
    if (!(factor >= 1.0)) throw DomainError("scale factor must be >= 1");
    auto fa = a.coeff_;
    std::ostringstream name;
    name << factor << "*" << a.name_;
    return EntireFunction([fa, factor](int n) { return factor * fa(n); },
                          factor * a.gamma_, name.str());
}

EntireFunction EntireFunction::parse(const std::string& descriptor) {
    if (descriptor == "exp") return exp_function();
    if (descriptor == "alt") return alternating();
    if (descriptor.rfind("osc:", 0) == 0) {
        try {
            return oscillatory(std::stod(descriptor.substr(4)));
        } catch (const std::logic_error&) {
            throw ConfigError("bad oscillation rate in '" + descriptor + "'");
        }
    }
    if (descriptor.rfind("custom:", 0) == 0) {
        const std::string path = descriptor.substr(7);
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open coefficient file '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("bad coefficient JSON in '" + path + "': " + e.what());
        }
        if (!j.is_array() || j.empty())
            throw ConfigError("coefficient file must hold a nonempty array");
        std::vector<Cplx> coeffs;
        for (const auto& entry : j) {
            if (!entry.is_array() || entry.size() != 2)
                throw ConfigError("coefficients must be [re, im] pairs");
            coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
        return from_coefficient_list(std::move(coeffs));
    }
    throw ConfigError("unknown entire function '" + descriptor + "'");
}

HoloFunction::HoloFunction(DerivFn deriv, double radius, std::string name, EvalFn eval)
    : deriv_(std::move(deriv)), radius_(radius), name_(std::move(name)),
      eval_(std::move(eval)) {
    if (!(radius_ > 0.0)) throw DomainError("convergence radius must be positive");
}

Cplx HoloFunction::evaluate(Cplx z) const {
    if (!eval_) throw DomainError("'" + name_ + "' has no closed-form evaluator");
    return eval_(z);
}

double HoloFunction::sup_on_circle(double r, int samples) const {
    if (!(r < radius_)) throw DomainError("sampling circle outside convergence disk");
    double mx = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * M_PI * i / samples;
        mx = std::max(mx, std::abs(evaluate(std::polar(r, t))));
    }
    return mx;
}

HoloFunction HoloFunction::geometric(double pole_radius) {
    if (!(pole_radius > 0.0)) throw DomainError("pole radius must be positive");
    std::ostringstream name;
    name << "geometric:" << pole_radius;
    return HoloFunction(
        [pole_radius](int n) {
            // g^{(n)}(0) = n! / R^n, in log scale to survive large n.
            return Cplx(std::exp(std::lgamma(n + 1.0) -
                                 static_cast<double>(n) * std::log(pole_radius)),
                        0.0);
        },
        pole_radius, name.str(),
        [pole_radius](Cplx z) { return 1.0 / (1.0 - z / pole_radius); });
}

HoloFunction HoloFunction::exp_dilation(Cplx a) {
    std::ostringstream name;
    name << "exp:" << a.real();
    if (a.imag() != 0.0) name << "+" << a.imag() << "i";
    return HoloFunction(
        [a](int n) {
            Cplx p(1.0, 0.0);
            for (int i = 0; i < n; ++i) p *= a;
            return p;
        },
        1e12, name.str(), [a](Cplx z) { return std::exp(a * z); });
}

HoloFunction HoloFunction::polynomial(std::vector<Cplx> coeffs) {
    if (coeffs.empty()) coeffs.push_back(Cplx(0.0, 0.0));
    auto shared = std::make_shared<std::vector<Cplx>>(std::move(coeffs));
    return HoloFunction(
        [shared](int n) {
            if (static_cast<size_t>(n) >= shared->size()) return Cplx(0.0, 0.0);
            return (*shared)[static_cast<size_t>(n)] * std::exp(std::lgamma(n + 1.0));
        },
        1e12, "poly",
        [shared](Cplx z) {
            Cplx acc(0.0, 0.0);
            for (size_t i = shared->size(); i-- > 0;) acc = acc * z + (*shared)[i];
            return acc;
        });
}

HoloFunction HoloFunction::monomial(int k) {
    if (k < 0) throw DomainError("monomial degree must be >= 0");
    std::ostringstream name;
    name << "monomial:" << k;
    return HoloFunction(
        [k](int n) {
            return n == k ? Cplx(std::exp(std::lgamma(k + 1.0)), 0.0) : Cplx(0.0, 0.0);
        },
        1e12, name.str(),
        [k](Cplx z) {
            Cplx p(1.0, 0.0);
            for (int i = 0; i < k; ++i) p *= z;
            return p;
        });
}

HoloFunction HoloFunction::parse(const std::string& descriptor) {
    auto number_after = [&](size_t prefix_len) {
        try {
            return std::stod(descriptor.substr(prefix_len));
        } catch (const std::logic_error&) {
            throw ConfigError("bad number in '" + descriptor + "'");
        }
    };
    if (descriptor.rfind("geometric:", 0) == 0) return geometric(number_after(10));
    if (descriptor.rfind("exp:", 0) == 0) return exp_dilation(Cplx(number_after(4), 0.0));
    if (descriptor.rfind("monomial:", 0) == 0)
        return monomial(static_cast<int>(number_after(9)));
    if (descriptor.rfind("poly:", 0) == 0) {
        std::vector<Cplx> coeffs;
        std::stringstream ss(descriptor.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                coeffs.emplace_back(std::stod(item), 0.0);
            } catch (const std::logic_error&) {
                throw ConfigError("bad polynomial coefficient '" + item + "'");
            }
        }
        if (coeffs.empty()) throw ConfigError("empty polynomial in '" + descriptor + "'");
        return polynomial(std::move(coeffs));
    }
    throw ConfigError("unknown target function '" + descriptor + "'");
}

}  // namespace fpade
