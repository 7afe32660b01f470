#include "stieltjes/transforms.hpp"

#include <sstream>
#include <utility>

#include "stieltjes/error.hpp"
#include "stieltjes/linalg.hpp"

namespace stieltjes {

namespace {

void require_length(const MatSeq& s, long min_kappa, const char* what) {
    if (s.kappa() < min_kappa) {
        std::ostringstream os;
        os << what << " needs top index >= " << min_kappa << ", got " << s.kappa();
        throw error("sequence-too-short", os.str());
    }
}

} // namespace

MatSeq reciprocal(const MatSeq& s) {
    std::vector<CMatrix> r;
    r.reserve(s.size());
    if (s.size() > 0) {
        const CMatrix s0_dag = pinv(s.at(0));
        r.push_back(s0_dag);
        for (std::size_t j = 1; j < s.size(); ++j) {
            CMatrix acc = CMatrix::zero(s.p(), s.p());
            for (std::size_t l = 0; l < j; ++l) acc = acc + s.at(j - l) * r[l];
            r.push_back(-(s0_dag * acc));
        }
    }
    return MatSeq(s.q(), s.p(), s.alpha(), std::move(r));
}

MatSeq alpha_shift(const MatSeq& s) {
    require_length(s, 1, "alpha_shift");
    std::vector<CMatrix> out;
    out.reserve(s.size() - 1);
    for (std::size_t j = 0; j + 1 < s.size(); ++j)
        out.push_back(-s.alpha() * s.at(j) + s.at(j + 1));
    return MatSeq(s.p(), s.q(), s.alpha(), std::move(out));
}

MatSeq splus(const MatSeq& s) {
    std::vector<CMatrix> out;
    out.reserve(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j == 0) {
            out.push_back(s.at(0));
        } else {
            out.push_back(-s.alpha() * s.at(j - 1) + s.at(j));
        }
    }
    return MatSeq(s.p(), s.q(), s.alpha(), std::move(out));
}

MatSeq reza(const MatSeq& s) {
    return reciprocal(splus(s));
}

MatSeq shortened(const MatSeq& s) {
    require_length(s, 1, "short");
    const MatSeq r = reza(s);
    std::vector<CMatrix> out;
    out.reserve(s.size() - 1);
    for (std::size_t j = 1; j < r.size(); ++j) out.push_back(-r.at(j));
    return MatSeq(s.q(), s.p(), s.alpha(), std::move(out));
}

MatSeq schur1(const MatSeq& s) {
    require_length(s, 1, "schur1");
    const MatSeq sh = shortened(s);
    std::vector<CMatrix> out;
    out.reserve(sh.size());
    for (std::size_t j = 0; j < sh.size(); ++j)
        out.push_back(s.at(0) * sh.at(j) * s.at(0));
    return MatSeq(s.p(), s.q(), s.alpha(), std::move(out));
}

MatSeq schurk(const MatSeq& s, std::size_t k) {
    if (static_cast<long>(k) > s.kappa()) {
        std::ostringstream os;
        os << "schurk needs k <= top index, got k=" << k << ", top index "
           << s.kappa();
        throw error("k-out-of-range", os.str());
    }
    MatSeq out = s;
    for (std::size_t i = 0; i < k; ++i) out = schur1(out);
    return out;
}

MatSeq inverse1(const MatSeq& t, const CMatrix& a) {
    if (a.rows() != t.p() || a.cols() != t.q()) {
        std::ostringstream os;
        os << "inverse1 needs A of shape " << t.p() << "x" << t.q() << ", got "
           << a.rows() << "x" << a.cols();
        throw error("shape-mismatch", os.str());
    }
    const CMatrix a_dag = pinv(a);
    const CMatrix proj = a * a_dag;
    std::vector<CMatrix> s;
    std::vector<CMatrix> u;
    s.reserve(t.size() + 1);
    u.reserve(t.size() + 1);
    s.push_back(a);
    u.push_back(a);
    for (std::size_t j = 1; j <= t.size(); ++j) {
        CMatrix acc = CMatrix::zero(t.p(), t.q());
        for (std::size_t k = 0; k < j; ++k)
            acc = acc + t.at(j - 1 - k) * a_dag * u[k];
        s.push_back(t.alpha() * s[j - 1] + proj * acc);
        u.push_back(-t.alpha() * s[j - 1] + s[j]);
    }
    return MatSeq(t.p(), t.q(), t.alpha(), std::move(s));
}

} // namespace stieltjes
