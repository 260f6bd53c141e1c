#include "fpade/frequency.hpp"

#include <cmath>
#include <limits>

namespace fpade {

FrequencyTuple::FrequencyTuple(std::vector<Cplx> points) : points_(std::move(points)) {
    if (points_.empty()) throw DomainError("frequency tuple must be nonempty");
    max_abs_ = 0.0;
    for (const Cplx& p : points_) max_abs_ = std::max(max_abs_, std::abs(p));
    separation_ = std::numeric_limits<double>::infinity();
    const int m = size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            separation_ = std::min(separation_, std::abs(points_[i] - points_[j]));
    if (m > 1 && separation_ <= separation_guard(max_abs_))
        throw DomainError("frequency points too close: separation " +
                          std::to_string(separation_) + " at scale " +
                          std::to_string(max_abs_));
}

FrequencyTuple FrequencyTuple::erased(int i) const {
    std::vector<Cplx> rest;
    rest.reserve(points_.size() - 1);
    for (int j = 0; j < size(); ++j)
        if (j != i) rest.push_back(points_[static_cast<size_t>(j)]);
    return FrequencyTuple(std::move(rest));
}

FrequencyTuple FrequencyTuple::roots_of_unity(int m, double radius) {
    if (m < 1) throw DomainError("roots_of_unity needs m >= 1");
    std::vector<Cplx> pts;
    pts.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = 2.0 * M_PI * j / m;
        pts.emplace_back(radius * std::cos(t), radius * std::sin(t));
    }
    return FrequencyTuple(std::move(pts));
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

FrequencyTuple random_separated_tuple(int m, double min_sep, std::mt19937_64& rng,
                                      double radius) {
    std::vector<Cplx> pts;
    pts.reserve(static_cast<size_t>(m));
    long attempts = 0;
    long stuck = 0;
    while (static_cast<int>(pts.size()) < m) {
        if (++attempts > 1000000)
            throw DomainError("cannot place " + std::to_string(m) +
                              " points at separation " + std::to_string(min_sep));
        // A greedy fill can wedge itself; drop the partial tuple when one
        // slot refuses to fill and start over.
        if (++stuck > 20000) {
            pts.clear();
            stuck = 0;
        }
        const Cplx z(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
        if (std::abs(z) > 1.0) continue;
        const Cplx p = radius * z;
        bool ok = true;
        for (const Cplx& q : pts)
            if (std::abs(p - q) < min_sep) {
                ok = false;
                break;
            }
        if (ok) {
            pts.push_back(p);
            stuck = 0;
        }
    }
    return FrequencyTuple(std::move(pts));
}

}  // namespace fpade
