#ifndef FPADE_VANDERMONDE_HPP
#define FPADE_VANDERMONDE_HPP

#include <cstdint>
#include <vector>

#include "fpade/frequency.hpp"
#include "fpade/log_scale.hpp"
#include "fpade/matrix.hpp"

namespace fpade {

// A_m(q): the m x m matrix whose column j is (1, q_j, q_j^2, ..., q_j^{m-1}),
// so row n holds the n-th powers and A c = rhs matches coefficients against
// derivative data.
ComplexMatrix vandermonde_matrix(const FrequencyTuple& q);

// det A_m(q) = prod_{i<j} (q_j - q_i), accumulated in log scale.
LogComplex vdm_det(const FrequencyTuple& q);

// Elementary symmetric polynomials e_0..e_n of the given values, by the
// one-pass Horner-style recurrence e[k] += x * e[k-1] (descending k).
std::vector<Cplx> elementary_symmetric(const std::vector<Cplx>& xs);

struct VdmInverse {
    ComplexMatrix inv;
    double max_abs = 0.0;            // largest |entry| of the inverse
    bool conditioning_warning = false;  // max_abs > 1e14
};

// Closed-form inverse of A_m(q):
//   inv(i,k) = (-1)^{m-k} s_{m-k}(q with q_i removed) / prod_{j != i} (q_i - q_j)
// where s_l is the l-th elementary symmetric polynomial (s_0 = 1), rows
// indexed by i, columns by k = 1..m mapped to k-1.
VdmInverse vdm_inverse(const FrequencyTuple& q);

// A_m^{j,k}(q): A_{m+1} built on rows (q^0, ..., q^{m-1}, q^k) with row q^j
// deleted, the extra row q^k appended last.  Requires k > m-1 > j >= 0 or
// k >= m-1 = j; the row order is part of the definition (it fixes signs).
ComplexMatrix generalized_vandermonde(const FrequencyTuple& q, int j, int k);

// det A_m^{j,k} / det A_m: equals the Schur polynomial s_lambda(q) with
// lambda = (k-m+1, 1, ..., 1) (m-j-1 trailing ones).  Computed as a ratio of
// log-scale determinants via row-scaled Gaussian elimination.
LogComplex schur_ratio(const FrequencyTuple& q, int j, int k);

// Number of monomials of s_lambda counted with multiplicity, i.e. the number
// of semistandard tableaux-weighted terms k!/(j!(m-j-1)!(k-m)!(k-j)).
// Exact integer arithmetic; throws OverflowError past ~1e18.
std::uint64_t schur_term_count(int m, int j, int k);

// log |det| and phase of a general square complex matrix by row-scaled
// Gaussian elimination with partial pivoting; exact zero gives LogComplex::zero().
LogComplex log_det(ComplexMatrix a);

}  // namespace fpade

#endif
