#include "fpade/vandermonde.hpp"

#include <algorithm>
#include <cmath>

#include "fpade/errors.hpp"

namespace fpade {

ComplexMatrix vandermonde_matrix(const FrequencyTuple& q) {
    const int m = q.size();
    ComplexMatrix a(m, m);
    for (int col = 0; col < m; ++col) {
        Cplx p(1.0, 0.0);
        for (int row = 0; row < m; ++row) {
            a(row, col) = p;
            p *= q[col];
        }
    }
    return a;
}

LogComplex vdm_det(const FrequencyTuple& q) {
    const int m = q.size();
    LogComplex det = LogComplex::one();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) det = det * LogComplex::from(q[j] - q[i]);
    return det;
}

std::vector<Cplx> elementary_symmetric(const std::vector<Cplx>& xs) {
    std::vector<Cplx> e(xs.size() + 1, Cplx(0.0, 0.0));
    e[0] = Cplx(1.0, 0.0);
    // One-pass Horner recurrence: after absorbing x, e[k] += x e[k-1],
    // walked downward so each e[k-1] is still the previous stage's value.
    size_t absorbed = 0;
    for (const Cplx& x : xs) {
        ++absorbed;
        for (size_t k = absorbed; k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e;
}

VdmInverse vdm_inverse(const FrequencyTuple& q) {
    const int m = q.size();
    if (m > 64) throw DomainError("dense inverse capped at m = 64");
    VdmInverse out;
    out.inv = ComplexMatrix(m, m);
    for (int i = 0; i < m; ++i) {
        std::vector<Cplx> rest;
        rest.reserve(static_cast<size_t>(m) - 1);
        Cplx denom(1.0, 0.0);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            rest.push_back(q[j]);
            denom *= q[i] - q[j];
        }
        const std::vector<Cplx> s = elementary_symmetric(rest);
        for (int k = 1; k <= m; ++k) {
            const double sign = (m - k) % 2 == 0 ? 1.0 : -1.0;
            const Cplx v = sign * s[static_cast<size_t>(m - k)] / denom;
            out.inv(i, k - 1) = v;
            out.max_abs = std::max(out.max_abs, std::abs(v));
        }
    }
    out.conditioning_warning = out.max_abs > 1e14;
    return out;
}

namespace {

Cplx ipow(Cplx base, int n) {
    Cplx acc(1.0, 0.0);
    for (int i = 0; i < n; ++i) acc *= base;
    return acc;
}

}  // namespace

ComplexMatrix generalized_vandermonde(const FrequencyTuple& q, int j, int k) {
    const int m = q.size();
    if (!((k > m - 1 && m - 1 > j && j >= 0) || (k >= m - 1 && j == m - 1)))
        throw DomainError("indices must satisfy k > m-1 > j >= 0 or k >= m-1 = j");
    ComplexMatrix a(m, m);
    for (int col = 0; col < m; ++col) {
        int row = 0;
        Cplx p(1.0, 0.0);
        for (int power = 0; power < m; ++power) {
            if (power != j) a(row++, col) = p;
            p *= q[col];
        }
        // The power-k row goes last; the sign conventions downstream depend
        // on this exact order.
        a(row, col) = ipow(q[col], k);
    }
    return a;
}

LogComplex log_det(ComplexMatrix a) {
    if (a.rows != a.cols) throw DomainError("determinant of non-square matrix");
    const int n = a.rows;
    LogComplex det = LogComplex::one();
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return LogComplex::zero();
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = det.negated();
        }
        const Cplx p = a(col, col);
        det = det * LogComplex::from(p);
        // Scale the pivot row to 1 so later entries stay O(1); the absorbed
        // factor lives in the log-scale accumulator.
        for (int c = col; c < n; ++c) a(col, c) /= p;
        for (int r = col + 1; r < n; ++r) {
            const Cplx f = a(r, col);
            if (f == Cplx(0.0, 0.0)) continue;
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

LogComplex schur_ratio(const FrequencyTuple& q, int j, int k) {
    const int m = q.size();
    if (j == m - 1 && k == m - 1) return LogComplex::one();
    const LogComplex num = log_det(generalized_vandermonde(q, j, k));
    const LogComplex den = vdm_det(q);
    return num / den;
}

std::uint64_t schur_term_count(int m, int j, int k) {
    if (!((k > m - 1 && m - 1 > j && j >= 0) || (k >= m - 1 && j == m - 1)))
        throw DomainError("indices must satisfy k > m-1 > j >= 0 or k >= m-1 = j");
    if (k == m - 1) return 1;  // single empty tableau
    // k! / (j! (m-j-1)! (k-m)! (k-j)) = binom(k, j) binom(k-j-1, m-j-1),
    // a product of two binomials, each accumulated exactly (the running
    // division in the product form is always exact).
    const auto limit = static_cast<unsigned __int128>(1) << 63;
    auto binom = [limit](int n, int r) -> unsigned __int128 {
        r = std::min(r, n - r);
        unsigned __int128 acc = 1;
        for (int i = 1; i <= r; ++i) {
            acc = acc * static_cast<unsigned>(n - r + i);
            acc /= static_cast<unsigned>(i);
            // The running value only grows, so an early breach is final.
            if (acc > limit) throw OverflowError("tableau count exceeds 2^63");
        }
        return acc;
    };
    const unsigned __int128 total = binom(k, j) * binom(k - j - 1, m - j - 1);
    if (total > limit) throw OverflowError("tableau count exceeds 2^63");
    return static_cast<std::uint64_t>(total);
}

}  // namespace fpade
