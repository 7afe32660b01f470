#ifndef STIELTJES_LINALG_HPP
#define STIELTJES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "stieltjes/matrix.hpp"

namespace stieltjes {

// Reduced row echelon form; pivot_cols receives the pivot column indices
// in increasing order, so pivot_cols.size() is the rank.
CMatrix rref(const CMatrix& a, std::vector<std::size_t>& pivot_cols);

std::size_t rank(const CMatrix& a);

// Determinant of a square matrix (throws shape-mismatch otherwise).
GaussRational det(const CMatrix& a);

// Inverse of a square nonsingular matrix; throws division-by-zero when
// the matrix is singular.
CMatrix inverse(const CMatrix& a);

// Moore-Penrose pseudoinverse, exact.  With the rank factorization
// A = F G (F the pivot columns of A, G the nonzero rows of rref(A)) the
// matrix F*AG* is invertible of size rank(A) and
//   pinv(A) = G* (F*AG*)^{-1} F*.
// All four Penrose equations hold in exact arithmetic.
CMatrix pinv(const CMatrix& a);

enum class Definiteness { not_hermitian, indefinite, psd, pd };

// Exact definiteness test by pivoted Hermitian elimination.  Only ever
// pivots on positive diagonal entries; a negative diagonal entry, or a
// zero diagonal entry whose active row is nonzero, witnesses an
// indefinite matrix.  The matrix is positive definite when it is psd of
// full rank.
Definiteness psd_check(const CMatrix& a);

inline bool is_psd(const CMatrix& a) {
    auto d = psd_check(a);
    return d == Definiteness::psd || d == Definiteness::pd;
}
inline bool is_pd(const CMatrix& a) { return psd_check(a) == Definiteness::pd; }

// Ker a is contained in Ker b  iff  b pinv(a) a == b.
bool kernel_included(const CMatrix& a, const CMatrix& b);

// Ran c is contained in Ran a  iff  a pinv(a) c == c.
bool range_included(const CMatrix& a, const CMatrix& c);

} // namespace stieltjes

#endif
