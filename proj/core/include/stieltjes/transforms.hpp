#ifndef STIELTJES_TRANSFORMS_HPP
#define STIELTJES_TRANSFORMS_HPP

#include <cstddef>

#include "stieltjes/seq.hpp"

namespace stieltjes {

// Reciprocal sequence: r_0 = pinv(s_0), r_j = -pinv(s_0) * sum_{l<j}
// s_{j-l} r_l.  Output shape q x p, same length.
MatSeq reciprocal(const MatSeq& s);

// Alpha-shifted sequence s_alpha with members -alpha*s_j + s_{j+1};
// length drops by one.
MatSeq alpha_shift(const MatSeq& s);

// The [+,alpha] transform: t_j = -alpha*s_{j-1} + s_j with s_{-1} = 0,
// so t_0 = s_0 and the length is unchanged.
MatSeq splus(const MatSeq& s);

// The [#,alpha] sequence: reciprocal of splus(s).  Output shape q x p.
MatSeq reza(const MatSeq& s);

// The <alpha> transform (CLI kind "short"): j-th member is
// -(reza(s))_{j+1}; length drops by one, shape q x p.
MatSeq shortened(const MatSeq& s);

// First alpha-Schur transform: s_0 * shortened(s)_j * s_0; length drops
// by one, shape p x q.
MatSeq schur1(const MatSeq& s);

// k-fold iteration of schur1; k = 0 is the identity.
MatSeq schurk(const MatSeq& s, std::size_t k);

// Inverse of the first alpha-Schur transform with prescribed first
// member A: s_0 = A and
//   s_j = alpha*s_{j-1} + A pinv(A) sum_{k<j} t_{j-1-k} pinv(A) u_k
// where u = splus(s) is extended alongside s.  Length grows by one.
MatSeq inverse1(const MatSeq& t, const CMatrix& a);

} // namespace stieltjes

#endif
