#ifndef FPADE_MATRIX_HPP
#define FPADE_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <complex>
#include <vector>

namespace fpade {

using Cplx = std::complex<double>;

// Minimal dense row-major complex matrix; just enough for the Vandermonde
// formulas and their residual checks.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Cplx> a;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Cplx& operator()(int i, int j) const {
        return a[static_cast<size_t>(i) * cols + j];
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    assert(x.cols == y.rows);
    ComplexMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Cplx v = x(i, k);
            if (v == Cplx(0.0, 0.0)) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    double m = 0.0;
    for (size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

}  // namespace fpade

#endif
