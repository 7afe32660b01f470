#ifndef STIELTJES_SEQ_HPP
#define STIELTJES_SEQ_HPP

#include <cstddef>
#include <vector>

#include "stieltjes/matrix.hpp"

namespace stieltjes {

// A finite matrix sequence (s_0, ..., s_kappa) of shared shape p x q
// together with the interval parameter alpha.  The empty sequence
// (kappa = -1) is legal and keeps its shape, so transforms that shorten
// a sequence always have a well-typed result.
class MatSeq {
public:
    MatSeq(std::size_t p, std::size_t q, GaussRational alpha,
           std::vector<CMatrix> mats);

    static MatSeq empty(std::size_t p, std::size_t q, GaussRational alpha);

    std::size_t p() const { return p_; }
    std::size_t q() const { return q_; }
    const GaussRational& alpha() const { return alpha_; }
    bool alpha_is_real() const { return alpha_.is_real(); }

    std::size_t size() const { return mats_.size(); }
    // Top index; -1 for the empty sequence.
    long kappa() const { return static_cast<long>(mats_.size()) - 1; }

    const CMatrix& at(std::size_t j) const;
    const std::vector<CMatrix>& mats() const { return mats_; }

    // First m+1 terms with the same alpha; m = -1 gives the empty
    // sequence.
    MatSeq prefix(long m) const;

    MatSeq with_alpha(const GaussRational& alpha) const;

    bool is_hermitian_seq() const;

    friend bool operator==(const MatSeq& a, const MatSeq& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.alpha_ == b.alpha_ &&
               a.mats_ == b.mats_;
    }
    friend bool operator!=(const MatSeq& a, const MatSeq& b) { return !(a == b); }

private:
    std::size_t p_;
    std::size_t q_;
    GaussRational alpha_;
    std::vector<CMatrix> mats_;
};

// Stacked column y_{l,m} = col(s_l, ..., s_m) and stacked row
// z_{l,m} = row(s_l, ..., s_m); both need l <= m <= kappa.
CMatrix stacked_col(const MatSeq& s, std::size_t l, std::size_t m);
CMatrix stacked_row(const MatSeq& s, std::size_t l, std::size_t m);

} // namespace stieltjes

#endif
