#ifndef STIELTJES_BUILDERS_HPP
#define STIELTJES_BUILDERS_HPP

#include <cstddef>
#include <optional>

#include "stieltjes/seq.hpp"

namespace stieltjes {

enum class HankelKind { H, K, G, Halpha };

// Block Hankel matrices of a sequence: H_n = [s_{j+k}], K_n = [s_{j+k+1}],
// G_n = [s_{j+k+2}], and H_{alpha,n} = -alpha*H_n + K_n, each with n+1
// block rows and columns.
CMatrix hankel_block(const MatSeq& s, HankelKind kind, std::size_t n);

struct ToeplitzPair {
    CMatrix lower;
    CMatrix upper;
};

// Triangular block Toeplitz matrices S_m (lower, first block column
// s_0..s_m) and its upper counterpart with first block row s_0..s_m.
ToeplitzPair toeplitz_pair(const MatSeq& s, std::size_t m);

enum class StructuralKind { R, T, v, IO, OI };

// Structured companions of block size q with n+1 block rows: the block
// shift T_{q,n}, its resolvent R_{q,n}(z) = (I - z T)^{-1}, the first
// block selector v = [I; 0], and the identity stacks IO = [I_{nq}; 0]
// and OI = [0; I_{nq}].
CMatrix structural(std::size_t q, std::size_t n, StructuralKind which,
                   const std::optional<GaussRational>& z = std::nullopt);

// Schur complement family at index n; members whose index bound fails
// are absent rather than an error, so callers can take whatever the
// sequence length admits.
struct SchurComplements {
    std::optional<CMatrix> L;
    std::optional<CMatrix> Theta;
    std::optional<CMatrix> Lambda;
    std::optional<CMatrix> L_alpha;
    std::optional<CMatrix> Theta_alpha;
};

SchurComplements schur_complements(const MatSeq& s, std::size_t n);

// Individual members with eager bound checks (index-out-of-range).
// L_0 = s_0 and L_n = s_{2n} - z_{n,2n-1} pinv(H_{n-1}) y_{n,2n-1};
// Theta_0 = 0 and Theta_n = z_{n,2n-1} pinv(H_{n-1}) y_{n,2n-1};
// Lambda_n = G_{n-1} - y_{1,n} pinv(s_0) z_{1,n} for n >= 1; the alpha
// versions apply L and Theta to the alpha-shifted sequence.
CMatrix schur_L(const MatSeq& s, std::size_t n);
CMatrix schur_Theta(const MatSeq& s, std::size_t n);
CMatrix schur_Lambda(const MatSeq& s, std::size_t n);
CMatrix schur_L_alpha(const MatSeq& s, std::size_t n);
CMatrix schur_Theta_alpha(const MatSeq& s, std::size_t n);

enum class DVariant { plain, plus_alpha };

struct DPair {
    CMatrix left;
    CMatrix right;
};

// Unit block triangular normalization matrices
//   left  = (I (x) s_0) S_m^rez + I (x) (I_p - s_0 pinv(s_0)),
//   right = Srez_upper_m (I (x) s_0) + I (x) (I_q - pinv(s_0) s_0),
// where S^rez is the block Toeplitz of the reciprocal sequence; the
// plus_alpha variant applies the same construction to splus(s).
DPair d_matrices(const MatSeq& s, std::size_t m, DVariant variant);

} // namespace stieltjes

#endif
