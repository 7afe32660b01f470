#ifndef STIELTJES_PARAMETRIZE_HPP
#define STIELTJES_PARAMETRIZE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stieltjes/classify.hpp"
#include "stieltjes/rational.hpp"
#include "stieltjes/seq.hpp"

namespace stieltjes {

// Right parametrization of a sequence: the interleaved Schur
// complements Q_{2k} = L_k and Q_{2k+1} = L_alpha_k, with the sequence
// shape recorded so that even an empty parametrization reconstructs.
// provenance[j] names the source complement ("L_1", "L_alpha_0", ...).
struct Parametrization {
    GaussRational alpha;
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<CMatrix> Q;
    std::vector<std::string> provenance;

    long kappa() const { return static_cast<long>(Q.size()) - 1; }
};

Parametrization parametrize(const MatSeq& s);

// Unique inverse of parametrize: s_{2k} = Theta_k + Q_{2k} and
// s_{2k+1} = alpha*s_{2k} + Theta_alpha_k + Q_{2k+1}, the Theta values
// built from the already reconstructed prefix.
MatSeq reconstruct(const Parametrization& par);

// The same values through the Schur algorithm: Q_j = s_0^(j,alpha) for
// j < kappa and Q_kappa = s_0^(kappa,alpha) + Z_{kappa,kappa}.  The Z
// term comes from the defect route, keeping this computation disjoint
// from parametrize.  Requires a real alpha and s in K_nnd.
Parametrization parametrize_via_schur(const MatSeq& s);

// Defect matrices of the Schur algorithm.  With t = schurk(s, k), the
// compression defect
//   P = t_j - t_0 pinv(t_0) t_j pinv(t_0) t_0
// exists for j <= kappa - k, and the accumulated defect
//   Z = sum_{r<k} P_{j-r}^(r)
// exists for j >= k (the sum is empty when k = 0).  A field is absent
// when its index constraint fails; k > kappa or j > kappa is an error.
struct DefectPair {
    std::optional<CMatrix> P;
    std::optional<CMatrix> Z;
};

DefectPair defect_matrices(const MatSeq& s, std::size_t k, std::size_t j);

// Both sides of the rank and determinant factorizations
//   rank H_n       = sum_{k<n} rank s_0^(2k,alpha)   + rank of boundary
//   rank H_alpha_n = sum_{k<n} rank s_0^(2k+1,alpha) + rank of boundary
// where the boundary factor at top index j is s_0^(j,alpha) + Z_{j,j},
// and likewise with determinants and products.  The clean factors
// (k < n) are reported separately from the boundary factor, whose Z
// term vanishes except at the top index.  Requires a real alpha and
// s in K_nnd.
struct RankDetRow {
    std::string block;
    std::size_t rank_lhs = 0;
    std::size_t rank_clean = 0;
    std::size_t rank_boundary = 0;
    GaussRational det_lhs;
    GaussRational det_clean;
    GaussRational det_boundary;
    bool rank_match = false;
    bool det_match = false;
};

struct RankDetReport {
    std::vector<RankDetRow> rows;
    bool all_match = true;
};

RankDetReport rank_det_report(const MatSeq& s);

// The verdicts the parametrization characterizes: K_nnd by all Q_j psd
// plus the kernel chain Ker Q_j within Ker Q_{j+1} for j <= kappa-2,
// K_nnd_ext with the chain through j = kappa-1, K_pd by all Q_j pd,
// K_cd by a vanishing boundary value s_0^(kappa,alpha) + Z_{kappa,kappa},
// and K_cd_order_m by s_0^(m,alpha) = 0 for m < kappa.
ClassReport classify_via_parametrization(const MatSeq& s);

} // namespace stieltjes

#endif
