#include "stieltjes/seq.hpp"

#include <sstream>
#include <utility>

#include "stieltjes/error.hpp"

namespace stieltjes {

MatSeq::MatSeq(std::size_t p, std::size_t q, GaussRational alpha,
               std::vector<CMatrix> mats)
    : p_(p), q_(q), alpha_(std::move(alpha)), mats_(std::move(mats)) {
    for (std::size_t j = 0; j < mats_.size(); ++j) {
        if (mats_[j].rows() != p_ || mats_[j].cols() != q_) {
            std::ostringstream os;
            os << "sequence member " << j << " has shape " << mats_[j].rows()
               << "x" << mats_[j].cols() << ", expected " << p_ << "x" << q_;
            throw error("shape-mismatch", os.str());
        }
    }
}

MatSeq MatSeq::empty(std::size_t p, std::size_t q, GaussRational alpha) {
    return MatSeq(p, q, std::move(alpha), {});
}

const CMatrix& MatSeq::at(std::size_t j) const {
    if (j >= mats_.size()) {
        std::ostringstream os;
        os << "sequence index " << j << " exceeds top index " << kappa();
        throw error("index-out-of-range", os.str());
    }
    return mats_[j];
}

MatSeq MatSeq::prefix(long m) const {
    if (m < -1 || m > kappa()) {
        std::ostringstream os;
        os << "prefix top index " << m << " out of range for top index " << kappa();
        throw error("index-out-of-range", os.str());
    }
    std::vector<CMatrix> head(mats_.begin(), mats_.begin() + (m + 1));
    return MatSeq(p_, q_, alpha_, std::move(head));
}

MatSeq MatSeq::with_alpha(const GaussRational& alpha) const {
    return MatSeq(p_, q_, alpha, mats_);
}

bool MatSeq::is_hermitian_seq() const {
    for (const auto& m : mats_)
        if (!m.is_hermitian()) return false;
    return true;
}

CMatrix stacked_col(const MatSeq& s, std::size_t l, std::size_t m) {
    if (l > m || m >= s.size()) {
        throw error("index-out-of-range", "stacked column needs l <= m <= kappa");
    }
    CMatrix y((m - l + 1) * s.p(), s.q());
    for (std::size_t j = l; j <= m; ++j) y.set_block((j - l) * s.p(), 0, s.at(j));
    return y;
}

CMatrix stacked_row(const MatSeq& s, std::size_t l, std::size_t m) {
    if (l > m || m >= s.size()) {
        throw error("index-out-of-range", "stacked row needs l <= m <= kappa");
    }
    CMatrix z(s.p(), (m - l + 1) * s.q());
    for (std::size_t j = l; j <= m; ++j) z.set_block(0, (j - l) * s.q(), s.at(j));
    return z;
}

} // namespace stieltjes
