#include "stieltjes/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "stieltjes/builders.hpp"
#include "stieltjes/classify.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/gen.hpp"
#include "stieltjes/linalg.hpp"
#include "stieltjes/parametrize.hpp"
#include "stieltjes/transforms.hpp"

namespace stieltjes {

namespace {

// Collects clause results for one identity on one sequence.  The first
// failing clause freezes the verdict and keeps both sides verbatim.
class Probe {
public:
    explicit Probe(std::string name) : name_(std::move(name)) {}

    void equal(const std::string& clause, const CMatrix& lhs, const CMatrix& rhs)
    {
        ran_ = true;
        ++checks_;
        if (ok_ && lhs != rhs) {
            ok_ = false;
            detail_ = clause;
            discrepancies_ = {"lhs = " + lhs.to_string(), "rhs = " + rhs.to_string(),
                              "lhs - rhs = " + (lhs - rhs).to_string()};
        }
    }

    void equal_rank(const std::string& clause, std::size_t lhs, std::size_t rhs)
    {
        ran_ = true;
        ++checks_;
        if (ok_ && lhs != rhs) {
            ok_ = false;
            detail_ = clause;
            discrepancies_ = {"lhs rank = " + std::to_string(lhs),
                              "rhs rank = " + std::to_string(rhs)};
        }
    }

    void equal_scalar(const std::string& clause, const GaussRational& lhs,
                      const GaussRational& rhs)
    {
        ran_ = true;
        ++checks_;
        if (ok_ && !(lhs == rhs)) {
            ok_ = false;
            detail_ = clause;
            discrepancies_ = {"lhs = " + to_string(lhs), "rhs = " + to_string(rhs)};
        }
    }

    void require(const std::string& clause, bool holds, const std::string& witness = "")
    {
        ran_ = true;
        ++checks_;
        if (ok_ && !holds) {
            ok_ = false;
            detail_ = clause;
            if (!witness.empty()) discrepancies_ = {witness};
        }
    }

    IdentityCheck finish(const std::string& why_not) const
    {
        if (!ok_) return {name_, "fail", detail_, discrepancies_};
        if (!ran_) return {name_, "inapplicable", why_not, {}};
        return {name_, "pass", std::to_string(checks_) + " clauses verified", {}};
    }

private:
    std::string name_;
    bool ran_ = false;
    bool ok_ = true;
    std::size_t checks_ = 0;
    std::string detail_;
    std::vector<std::string> discrepancies_;
};

std::string at_n(const std::string& clause, std::size_t n)
{
    std::ostringstream os;
    os << clause << " at n = " << n;
    return os.str();
}

std::string at_j(const std::string& clause, std::size_t j)
{
    std::ostringstream os;
    os << clause << " at j = " << j;
    return os.str();
}

// First-term dominance up to the given index: s_0 pinv(s_0) s_j = s_j
// and s_j pinv(s_0) s_0 = s_j for all j <= top.
bool in_D(const MatSeq& s, long top)
{
    if (top < 0) return true;
    const CMatrix left = s.at(0) * pinv(s.at(0));
    const CMatrix right = pinv(s.at(0)) * s.at(0);
    for (long j = 0; j <= top; ++j) {
        const CMatrix& sj = s.at(static_cast<std::size_t>(j));
        if (left * sj != sj || sj * right != sj) return false;
    }
    return true;
}

// Weak dominance: members strictly below top are dominated, nothing is
// asked of the top member itself.
bool in_Dt(const MatSeq& s, long top)
{
    return top <= 0 || in_D(s, top - 1);
}

// The block diagonal defect carrier: zero except for the terminal block
// s_m - s_0 pinv(s_0) s_m pinv(s_0) s_0, with n+1 block rows.
CMatrix xi_block(const MatSeq& s, std::size_t n, std::size_t m)
{
    const CMatrix& s0 = s.at(0);
    CMatrix defect = s.at(m) - s0 * pinv(s0) * s.at(m) * pinv(s0) * s0;
    CMatrix out = CMatrix::zero((n + 1) * s.p(), (n + 1) * s.q());
    out.set_block(n * s.p(), n * s.q(), defect);
    return out;
}

CMatrix res_at(std::size_t blk, std::size_t n, const GaussRational& z)
{
    return structural(blk, n, StructuralKind::R, z);
}

CMatrix vcol(std::size_t blk, std::size_t n)
{
    return structural(blk, n, StructuralKind::v);
}

CMatrix oi_at(std::size_t blk, std::size_t n)
{
    return structural(blk, n, StructuralKind::OI);
}

std::size_t max0(long x)
{
    return x < 0 ? 0 : static_cast<std::size_t>(x);
}

IdentityCheck chk_L1445(const MatSeq& s)
{
    Probe pr("L1445");
    MatSeq rz = reza(s);
    MatSeq rc = reciprocal(s);
    for (std::size_t j = 0; j < s.size(); ++j) {
        CMatrix acc = CMatrix::zero(s.q(), s.p());
        for (std::size_t l = 0; l <= j; ++l)
            acc = acc + pow(s.alpha(), static_cast<unsigned long>(j - l)) * rc.at(l);
        pr.equal(at_j("power sum", j), rz.at(j), acc);
    }
    return pr.finish("sequence is empty");
}

IdentityCheck chk_L1453(const MatSeq& s)
{
    Probe pr("L1453");
    MatSeq lhs = splus(reza(s));
    MatSeq rhs = reciprocal(s);
    for (std::size_t j = 0; j < s.size(); ++j)
        pr.equal(at_j("member", j), lhs.at(j), rhs.at(j));
    return pr.finish("sequence is empty");
}

IdentityCheck chk_P1256(const MatSeq& s)
{
    Probe pr("P1256");
    if (!in_D(s, s.kappa()))
        return pr.finish("not first-term dominant");
    MatSeq rc = reciprocal(s);
    const CMatrix& s0 = s.at(0);
    for (std::size_t m = 0; m < s.size(); ++m) {
        ToeplitzPair ts = toeplitz_pair(s, m);
        ToeplitzPair tr = toeplitz_pair(rc, m);
        CMatrix eye = CMatrix::identity(m + 1);
        CMatrix left_proj = kron(eye, s0 * pinv(s0));
        CMatrix right_proj = kron(eye, pinv(s0) * s0);
        pr.equal(at_n("lower pseudoinverse", m), pinv(ts.lower), tr.lower);
        pr.equal(at_n("upper pseudoinverse", m), pinv(ts.upper), tr.upper);
        pr.equal(at_n("lower left projection", m), ts.lower * tr.lower, left_proj);
        pr.equal(at_n("upper left projection", m), ts.upper * tr.upper, left_proj);
        pr.equal(at_n("lower right projection", m), tr.lower * ts.lower, right_proj);
        pr.equal(at_n("upper right projection", m), tr.upper * ts.upper, right_proj);
    }
    return pr.finish("sequence is empty");
}

IdentityCheck chk_L1606(const MatSeq& s)
{
    Probe pr("L1606");
    const GaussRational& a = s.alpha();
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    MatSeq sp = splus(s);
    for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
        CMatrix rhs = inverse(res_at(p, n, a)) * hankel_block(s, HankelKind::H, n)
                          * inverse(res_at(q, n, a.conj())).conj_transpose()
                      + a * (oi_at(p, n) * hankel_block(s, HankelKind::Halpha, n - 1)
                             * oi_at(q, n).conj_transpose());
        pr.equal(at_n("(a)", n), hankel_block(sp, HankelKind::H, n), rhs);
    }
    for (std::size_t n = 0; static_cast<long>(2 * n + 1) <= kap; ++n)
        pr.equal(at_n("(b)", n), hankel_block(sp, HankelKind::K, n),
                 hankel_block(s, HankelKind::Halpha, n));
    for (std::size_t n = 0; static_cast<long>(2 * n + 2) <= kap; ++n)
        pr.equal(at_n("(c)", n), hankel_block(sp, HankelKind::G, n),
                 (-a) * hankel_block(s, HankelKind::K, n) + hankel_block(s, HankelKind::G, n));
    if (kap >= 1) {
        MatSeq sa = alpha_shift(s);
        for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
            CMatrix ya = stacked_col(sa, 0, n - 1);
            CMatrix za = stacked_row(sa, 0, n - 1);
            pr.equal(at_n("(d)", n), schur_Lambda(sp, n),
                     hankel_block(sa, HankelKind::K, n - 1) - ya * pinv(s.at(0)) * za);
        }
    }
    return pr.finish("needs kappa >= 1");
}

IdentityCheck chk_L1438(const MatSeq& s)
{
    Probe pr("L1438");
    const GaussRational& a = s.alpha();
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    MatSeq sp = splus(s);
    MatSeq rz = reza(s);
    MatSeq rc = reciprocal(s);
    for (std::size_t n = 0; static_cast<long>(2 * n) <= kap; ++n) {
        if (!in_Dt(s, static_cast<long>(2 * n))) continue;
        ToeplitzPair trz = toeplitz_pair(rz, n);
        ToeplitzPair tsp = toeplitz_pair(sp, n);
        CMatrix y_rz = stacked_col(rz, 0, n);
        CMatrix z_rz = stacked_row(rz, 0, n);
        CMatrix y_sp = stacked_col(sp, 0, n);
        CMatrix z_sp = stacked_row(sp, 0, n);
        CMatrix vp = vcol(p, n);
        CMatrix vq = vcol(q, n);
        pr.equal(at_n("(a) reza display", n),
                 hankel_block(rz, HankelKind::H, n)
                     + trz.lower * hankel_block(sp, HankelKind::H, n) * trz.upper,
                 y_rz * vp.conj_transpose() + vq * z_rz);
        pr.equal(at_n("(a) splus display", n),
                 hankel_block(sp, HankelKind::H, n)
                     + tsp.lower * hankel_block(rz, HankelKind::H, n) * tsp.upper,
                 y_sp * vq.conj_transpose() + vp * z_sp + xi_block(s, n, 2 * n));
        if (n >= 1) {
            ToeplitzPair ts = toeplitz_pair(s, n);
            CMatrix rpa = res_at(p, n, a);
            CMatrix rqc = res_at(q, n, a.conj());
            CMatrix mid = hankel_block(s, HankelKind::H, n)
                          + a * (rpa * oi_at(p, n) * hankel_block(s, HankelKind::Halpha, n - 1)
                                 * (rqc * oi_at(q, n)).conj_transpose());
            pr.equal(at_n("(b) reciprocal display", n),
                     hankel_block(rz, HankelKind::H, n) + pinv(ts.lower) * mid * pinv(ts.upper),
                     res_at(q, n, a) * stacked_col(rc, 0, n) * vp.conj_transpose()
                         + vq * stacked_row(rc, 0, n)
                               * res_at(p, n, a.conj()).conj_transpose());
            pr.equal(at_n("(b) plain display", n),
                     mid + ts.lower * hankel_block(rz, HankelKind::H, n) * ts.upper,
                     stacked_col(s, 0, n) * (rqc * vq).conj_transpose()
                         + rpa * vp * stacked_row(s, 0, n) + xi_block(s, n, 2 * n));
        }
    }
    return pr.finish("no n with 2n <= kappa and weakly dominant 2n-prefix");
}

IdentityCheck chk_T2047(const MatSeq& s)
{
    Probe pr("T2047");
    const GaussRational& a = s.alpha();
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    MatSeq sp = splus(s);
    MatSeq rz = reza(s);
    MatSeq rc = reciprocal(s);
    for (std::size_t n = 0; static_cast<long>(2 * n) <= kap; ++n) {
        if (!in_Dt(s, static_cast<long>(2 * n))) continue;
        ToeplitzPair trz = toeplitz_pair(rz, n);
        ToeplitzPair tsp = toeplitz_pair(sp, n);
        CMatrix y_rz = stacked_col(rz, 0, n);
        CMatrix z_rz = stacked_row(rz, 0, n);
        CMatrix y_sp = stacked_col(sp, 0, n);
        CMatrix z_sp = stacked_row(sp, 0, n);
        CMatrix vp = vcol(p, n);
        CMatrix vq = vcol(q, n);
        CMatrix h_rz = hankel_block(rz, HankelKind::H, n);
        CMatrix h_sp = hankel_block(sp, HankelKind::H, n);
        CMatrix sp_core = h_sp - (y_sp * vq.conj_transpose() + vp * z_sp);
        CMatrix rz_core = h_rz - (y_rz * vp.conj_transpose() + vq * z_rz);
        pr.equal(at_n("(a) reza side", n), h_rz, -(trz.lower * sp_core * trz.upper));
        pr.equal(at_n("(a) splus side", n), h_sp,
                 xi_block(s, n, 2 * n) - tsp.lower * rz_core * tsp.upper);
        if (n >= 1) {
            ToeplitzPair ts = toeplitz_pair(s, n);
            CMatrix rpa = res_at(p, n, a);
            CMatrix rqc = res_at(q, n, a.conj());
            CMatrix mid = hankel_block(s, HankelKind::H, n)
                          + a * (rpa * oi_at(p, n) * hankel_block(s, HankelKind::Halpha, n - 1)
                                 * (rqc * oi_at(q, n)).conj_transpose());
            CMatrix plain_core =
                mid - (stacked_col(s, 0, n) * (rqc * vq).conj_transpose()
                       + rpa * vp * stacked_row(s, 0, n));
            CMatrix rec_core =
                h_rz - (res_at(q, n, a) * stacked_col(rc, 0, n) * vp.conj_transpose()
                        + vq * stacked_row(rc, 0, n)
                              * res_at(p, n, a.conj()).conj_transpose());
            pr.equal(at_n("(b) reza side", n), h_rz,
                     -(pinv(ts.lower) * plain_core * pinv(ts.upper)));
            pr.equal(at_n("(b) plain side", n), mid,
                     xi_block(s, n, 2 * n) - ts.lower * rec_core * ts.upper);
        }
        pr.equal_rank(at_n("(c)", n), rank(h_rz), rank(sp_core - xi_block(s, n, 2 * n)));
        if (p == q)
            pr.equal_scalar(at_n("(d)", n), det(h_rz),
                            pow(pinv(det(s.at(0))), 2 * n + 2) * det(-sp_core));
    }
    return pr.finish("no n with 2n <= kappa and weakly dominant 2n-prefix");
}

IdentityCheck chk_T1640(const MatSeq& s)
{
    Probe pr("T1640");
    const GaussRational& a = s.alpha();
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    MatSeq sp = splus(s);
    MatSeq rz = reza(s);
    for (std::size_t n = 0; static_cast<long>(2 * n + 1) <= kap; ++n) {
        if (!in_Dt(s, static_cast<long>(2 * n + 1))) continue;
        ToeplitzPair trz = toeplitz_pair(rz, n);
        ToeplitzPair tsp = toeplitz_pair(sp, n);
        ToeplitzPair ts = toeplitz_pair(s, n);
        CMatrix k_rz = hankel_block(rz, HankelKind::K, n);
        CMatrix k_sp = hankel_block(sp, HankelKind::K, n);
        CMatrix ha = hankel_block(s, HankelKind::Halpha, n);
        pr.equal(at_n("(a) splus route", n), k_rz, -(trz.lower * k_sp * trz.upper));
        pr.equal(at_n("(a) pseudoinverse route", n), k_rz,
                 -(res_at(q, n, a) * pinv(ts.lower) * ha * pinv(ts.upper)
                   * res_at(p, n, a.conj()).conj_transpose()));
        pr.equal(at_n("(b)", n), k_sp,
                 xi_block(s, n, 2 * n + 1) - tsp.lower * k_rz * tsp.upper);
        pr.equal_rank(at_n("(c)", n), rank(k_rz), rank(k_sp - xi_block(s, n, 2 * n + 1)));
        if (p == q)
            pr.equal_scalar(at_n("(d)", n), det(k_rz),
                            pow(pinv(det(s.at(0))), 2 * n + 2) * det(-k_sp));
    }
    return pr.finish("no n with 2n+1 <= kappa and weakly dominant (2n+1)-prefix");
}

IdentityCheck chk_T1701(const MatSeq& s)
{
    Probe pr("T1701");
    const GaussRational& a = s.alpha();
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    MatSeq sp = splus(s);
    MatSeq rz = reza(s);
    for (std::size_t n = 0; static_cast<long>(2 * n + 2) <= kap; ++n) {
        if (!in_Dt(s, static_cast<long>(2 * n + 2))) continue;
        MatSeq sa = alpha_shift(s);
        ToeplitzPair trz = toeplitz_pair(rz, n);
        ToeplitzPair tsp = toeplitz_pair(sp, n);
        ToeplitzPair ts = toeplitz_pair(s, n);
        ToeplitzPair ts1 = toeplitz_pair(s, n + 1);
        CMatrix g_rz = hankel_block(rz, HankelKind::G, n);
        CMatrix lam_sp = schur_Lambda(sp, n + 1);
        CMatrix lam_rz = schur_Lambda(rz, n + 1);
        CMatrix ya = stacked_col(sa, 0, n);
        CMatrix za = stacked_row(sa, 0, n);
        CMatrix core = hankel_block(sa, HankelKind::K, n) - ya * pinv(s.at(0)) * za;
        CMatrix rqa = res_at(q, n, a);
        CMatrix rpc = res_at(p, n, a.conj());
        pr.equal(at_n("(a) complement route", n), g_rz, -(trz.lower * lam_sp * trz.upper));
        pr.equal(at_n("(a) shift route", n), g_rz,
                 -(rqa * pinv(ts.lower) * core * pinv(ts.upper) * rpc.conj_transpose()));
        pr.equal(at_n("(a) split route", n), g_rz,
                 -(oi_at(q, n + 1).conj_transpose() * pinv(ts1.lower)
                   * hankel_block(s, HankelKind::H, n + 1) * pinv(ts1.upper) * oi_at(p, n + 1))
                     - a * (rqa * pinv(ts.lower) * hankel_block(s, HankelKind::Halpha, n)
                            * pinv(ts.upper) * rpc.conj_transpose()));
        pr.equal(at_n("(b)", n), hankel_block(sp, HankelKind::G, n),
                 xi_block(s, n, 2 * n + 2) - tsp.lower * lam_rz * tsp.upper);
        pr.equal_rank(at_n("(c) complement side", n), rank(g_rz),
                      rank(lam_sp - xi_block(s, n, 2 * n + 2)));
        pr.equal_rank(at_n("(c) shift side", n), rank(g_rz),
                      rank(core - xi_block(s, n, 2 * n + 2)));
        if (p == q) {
            GaussRational factor = pow(pinv(det(s.at(0))), 2 * n + 2);
            pr.equal_scalar(at_n("(d) complement side", n), det(g_rz), factor * det(-lam_sp));
            pr.equal_scalar(at_n("(d) shift side", n), det(g_rz), factor * det(-core));
        }
    }
    return pr.finish("no n with 2n+2 <= kappa and weakly dominant (2n+2)-prefix");
}

IdentityCheck chk_P1620(const MatSeq& s)
{
    Probe pr("P1620");
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    MatSeq rc = reciprocal(s);
    for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
        if (!in_Dt(s, static_cast<long>(2 * n))) continue;
        ToeplitzPair ts = toeplitz_pair(s, n);
        pr.equal(at_n("display", n), hankel_block(rc, HankelKind::G, n - 1),
                 -(oi_at(q, n).conj_transpose() * pinv(ts.lower)
                   * hankel_block(s, HankelKind::H, n) * pinv(ts.upper) * oi_at(p, n)));
    }
    return pr.finish("no n >= 1 with 2n <= kappa and weakly dominant 2n-prefix");
}

IdentityCheck chk_L1513(const MatSeq& s)
{
    Probe pr("L1513");
    const GaussRational& a = s.alpha();
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    if (kap >= 1) {
        MatSeq sh = shortened(s);
        MatSeq rz = reza(s);
        for (std::size_t n = 0; static_cast<long>(2 * n + 1) <= kap; ++n) {
            if (!in_Dt(s, static_cast<long>(2 * n + 1))) continue;
            ToeplitzPair ts = toeplitz_pair(s, n);
            CMatrix lhs = hankel_block(sh, HankelKind::H, n);
            CMatrix ha = hankel_block(s, HankelKind::Halpha, n);
            pr.equal(at_n("(a) reza route", n), lhs, -hankel_block(rz, HankelKind::K, n));
            pr.equal(at_n("(a) pseudoinverse route", n), lhs,
                     res_at(q, n, a) * pinv(ts.lower) * ha * pinv(ts.upper)
                         * res_at(p, n, a.conj()).conj_transpose());
            pr.equal_rank(at_n("(b)", n), rank(lhs), rank(ha - xi_block(s, n, 2 * n + 1)));
            if (p == q)
                pr.equal_scalar(at_n("(c)", n), det(lhs),
                                pow(pinv(det(s.at(0))), 2 * n + 2) * det(ha));
        }
    }
    return pr.finish("no n with 2n+1 <= kappa and weakly dominant (2n+1)-prefix");
}

IdentityCheck chk_L1104(const MatSeq& s)
{
    Probe pr("L1104");
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    if (kap >= 2) {
        MatSeq sh = shortened(s);
        for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
            if (!in_Dt(s, static_cast<long>(2 * n))) continue;
            ToeplitzPair ts = toeplitz_pair(s, n);
            ToeplitzPair tsm = toeplitz_pair(s, n - 1);
            CMatrix lhs = hankel_block(sh, HankelKind::Halpha, n - 1);
            CMatrix lam = schur_Lambda(s, n);
            pr.equal(at_n("(a) corner route", n), lhs,
                     oi_at(q, n).conj_transpose() * pinv(ts.lower)
                         * hankel_block(s, HankelKind::H, n) * pinv(ts.upper) * oi_at(p, n));
            pr.equal(at_n("(a) complement route", n), lhs,
                     pinv(tsm.lower) * lam * pinv(tsm.upper));
            pr.equal_rank(at_n("(b) Hankel side", n), rank(lhs) + rank(s.at(0)),
                          rank(hankel_block(s, HankelKind::H, n) - xi_block(s, n, 2 * n)));
            pr.equal_rank(at_n("(b) complement side", n), rank(lhs),
                          rank(lam - xi_block(s, n - 1, 2 * n)));
            if (p == q) {
                pr.equal_scalar(at_n("(c) Hankel side", n), det(lhs),
                                pow(pinv(det(s.at(0))), 2 * n + 1)
                                    * det(hankel_block(s, HankelKind::H, n)));
                pr.equal_scalar(at_n("(c) complement side", n), det(lhs),
                                pow(pinv(det(s.at(0))), 2 * n) * det(lam));
            }
        }
    }
    return pr.finish("no n >= 1 with 2n <= kappa and weakly dominant 2n-prefix");
}

IdentityCheck chk_L1611(const MatSeq& s)
{
    Probe pr("L1611");
    const long kap = s.kappa();
    if (kap >= 2) {
        MatSeq sh = shortened(s);
        for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
            if (!in_Dt(s, static_cast<long>(2 * n))) continue;
            ToeplitzPair ts = toeplitz_pair(s, n);
            pr.equal(at_n("display", n),
                     pinv(ts.lower) * hankel_block(s, HankelKind::H, n) * pinv(ts.upper),
                     block_diag({pinv(s.at(0)),
                                 hankel_block(sh, HankelKind::Halpha, n - 1)}));
        }
    }
    return pr.finish("no n >= 1 with 2n <= kappa and weakly dominant 2n-prefix");
}

IdentityCheck chk_L1548(const MatSeq& s)
{
    Probe pr("L1548");
    const GaussRational& a = s.alpha();
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    if (kap >= 1) {
        MatSeq c1 = schur1(s);
        for (std::size_t n = 0; static_cast<long>(2 * n + 1) <= kap; ++n) {
            if (!in_Dt(s, static_cast<long>(2 * n + 1))) continue;
            ToeplitzPair ts = toeplitz_pair(s, n);
            DPair dp = d_matrices(s, n, DVariant::plus_alpha);
            CMatrix is0 = kron(CMatrix::identity(n + 1), s.at(0));
            CMatrix lhs = hankel_block(c1, HankelKind::H, n);
            CMatrix ha = hankel_block(s, HankelKind::Halpha, n);
            CMatrix compressed = ha - xi_block(s, n, 2 * n + 1);
            pr.equal(at_n("(a) pseudoinverse route", n), lhs,
                     res_at(p, n, a) * is0 * pinv(ts.lower) * ha * pinv(ts.upper) * is0
                         * res_at(q, n, a.conj()).conj_transpose());
            pr.equal(at_n("(a) normalization route", n), lhs,
                     dp.left * compressed * dp.right);
            pr.equal_rank(at_n("(b)", n), rank(lhs), rank(compressed));
            if (p == q) {
                pr.equal_scalar(at_n("(c) factored", n), det(lhs),
                                det(s.at(0)) * pinv(det(s.at(0))) * det(ha));
                pr.equal_scalar(at_n("(c) compressed", n), det(lhs), det(compressed));
            }
        }
    }
    return pr.finish("no n with 2n+1 <= kappa and weakly dominant (2n+1)-prefix");
}

IdentityCheck chk_L1545(const MatSeq& s)
{
    Probe pr("L1545");
    const std::size_t p = s.p();
    const std::size_t q = s.q();
    const long kap = s.kappa();
    if (kap >= 2) {
        MatSeq c1 = schur1(s);
        for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
            if (!in_Dt(s, static_cast<long>(2 * n))) continue;
            ToeplitzPair tsm = toeplitz_pair(s, n - 1);
            DPair dp = d_matrices(s, n - 1, DVariant::plain);
            CMatrix is0 = kron(CMatrix::identity(n), s.at(0));
            CMatrix lhs = hankel_block(c1, HankelKind::Halpha, n - 1);
            CMatrix lam = schur_Lambda(s, n);
            CMatrix compressed = lam - xi_block(s, n - 1, 2 * n);
            pr.equal(at_n("(a) pseudoinverse route", n), lhs,
                     is0 * pinv(tsm.lower) * lam * pinv(tsm.upper) * is0);
            pr.equal(at_n("(a) normalization route", n), lhs,
                     dp.left * compressed * dp.right);
            pr.equal_rank(at_n("(b)", n), rank(lhs), rank(compressed));
            if (p == q) {
                pr.equal_scalar(at_n("(c) factored", n), det(lhs),
                                det(s.at(0)) * pinv(det(s.at(0))) * det(lam));
                pr.equal_scalar(at_n("(c) compressed", n), det(lhs), det(compressed));
            }
        }
    }
    return pr.finish("no n >= 1 with 2n <= kappa and weakly dominant 2n-prefix");
}

IdentityCheck chk_L1705(const MatSeq& s)
{
    Probe pr("L1705");
    const long kap = s.kappa();
    if (kap >= 2) {
        MatSeq c1 = schur1(s);
        for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
            if (!in_Dt(s, static_cast<long>(2 * n))) continue;
            DPair dp = d_matrices(s, n, DVariant::plain);
            pr.equal(at_n("display", n),
                     dp.left * hankel_block(s, HankelKind::H, n) * dp.right,
                     block_diag({s.at(0), hankel_block(c1, HankelKind::Halpha, n - 1)})
                         + xi_block(s, n, 2 * n));
        }
    }
    return pr.finish("no n >= 1 with 2n <= kappa and weakly dominant 2n-prefix");
}

IdentityCheck chk_L1441(const MatSeq& s)
{
    Probe pr("L1441");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    const std::size_t q = s.q();
    const long kap = s.kappa();
    for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
        MatSeq pre = s.prefix(static_cast<long>(2 * n));
        if (!classify(pre).verdicts.at("K_nnd")) continue;
        MatSeq t = schur1(pre);
        DPair dt = d_matrices(t, n - 1, DVariant::plus_alpha);
        DPair ds = d_matrices(pre, n, DVariant::plain);
        CMatrix lhs = block_diag({CMatrix::identity(q), dt.left}) * ds.left
                      * hankel_block(pre, HankelKind::H, n) * ds.right
                      * block_diag({CMatrix::identity(q), dt.right});
        CMatrix rhs = block_diag({pre.at(0),
                                  hankel_block(schurk(pre, 2), HankelKind::H, n - 1)})
                      + xi_block(pre, n, 2 * n) + xi_block(t, n, 2 * n - 1);
        pr.equal(at_n("display", n), lhs, rhs);
    }
    return pr.finish("no n >= 1 with 2n <= kappa and K_nnd 2n-prefix");
}

IdentityCheck chk_L1007(const MatSeq& s)
{
    Probe pr("L1007");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    const long kap = s.kappa();
    for (std::size_t n = 1; static_cast<long>(2 * n + 1) <= kap; ++n) {
        MatSeq pre = s.prefix(static_cast<long>(2 * n + 1));
        if (!classify(pre).verdicts.at("K_nnd")) continue;
        MatSeq t = schur1(pre);
        DPair dt = d_matrices(t, n, DVariant::plain);
        DPair dsp = d_matrices(pre, n, DVariant::plus_alpha);
        CMatrix lhs = dt.left * dsp.left * hankel_block(pre, HankelKind::Halpha, n)
                      * dsp.right * dt.right;
        CMatrix rhs = block_diag({t.at(0),
                                  hankel_block(schurk(pre, 2), HankelKind::Halpha, n - 1)})
                      + xi_block(pre, n, 2 * n + 1) + xi_block(t, n, 2 * n);
        pr.equal(at_n("display", n), lhs, rhs);
    }
    return pr.finish("no n >= 1 with 2n+1 <= kappa and K_nnd (2n+1)-prefix");
}

IdentityCheck chk_L1440(const MatSeq& s)
{
    Probe pr("L1440");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    const std::size_t q = s.q();
    const long kap = s.kappa();
    for (std::size_t n = 1; static_cast<long>(2 * n) <= kap; ++n) {
        MatSeq pre = s.prefix(static_cast<long>(2 * n));
        if (!classify(pre).verdicts.at("K_nnd")) continue;
        std::vector<MatSeq> chain{pre};
        for (std::size_t k = 1; k <= 2 * n; ++k) chain.push_back(schur1(chain.back()));
        CMatrix vvl = CMatrix::identity((n + 1) * q);
        CMatrix vvr = CMatrix::identity((n + 1) * q);
        for (std::size_t l = 0; l + 1 <= n; ++l) {
            DPair d_even = d_matrices(chain[2 * l], n - l, DVariant::plain);
            DPair d_odd = d_matrices(chain[2 * l + 1], n - l - 1, DVariant::plus_alpha);
            CMatrix core_l = block_diag({CMatrix::identity(q), d_odd.left}) * d_even.left;
            CMatrix core_r = d_even.right * block_diag({CMatrix::identity(q), d_odd.right});
            CMatrix vl = l == 0 ? core_l : block_diag({CMatrix::identity(l * q), core_l});
            CMatrix vr = l == 0 ? core_r : block_diag({CMatrix::identity(l * q), core_r});
            vvl = vl * vvl;
            vvr = vvr * vr;
        }
        CMatrix lhs = vvl * hankel_block(pre, HankelKind::H, n) * vvr;
        std::vector<CMatrix> heads;
        for (std::size_t k = 0; k + 1 <= n; ++k) heads.push_back(chain[2 * k].at(0));
        heads.push_back(chain[2 * n].at(0)
                        + defect_matrices(pre, 2 * n, 2 * n).Z.value());
        pr.equal(at_n("(b)", n), lhs, block_diag(heads));
        if (extendability_test(pre)) {
            heads.back() = chain[2 * n].at(0);
            pr.equal(at_n("(c)", n), lhs, block_diag(heads));
        }
    }
    return pr.finish("no n >= 1 with 2n <= kappa and K_nnd 2n-prefix");
}

IdentityCheck chk_L1306(const MatSeq& s)
{
    Probe pr("L1306");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    const std::size_t q = s.q();
    const long kap = s.kappa();
    for (std::size_t n = 0; static_cast<long>(2 * n + 1) <= kap; ++n) {
        MatSeq pre = s.prefix(static_cast<long>(2 * n + 1));
        if (!classify(pre).verdicts.at("K_nnd")) continue;
        std::vector<MatSeq> chain{pre};
        for (std::size_t k = 1; k <= 2 * n + 1; ++k) chain.push_back(schur1(chain.back()));
        CMatrix wwl = CMatrix::identity((n + 1) * q);
        CMatrix wwr = CMatrix::identity((n + 1) * q);
        for (std::size_t l = 0; l + 1 <= n; ++l) {
            DPair d_odd = d_matrices(chain[2 * l + 1], n - l, DVariant::plain);
            DPair d_even = d_matrices(chain[2 * l], n - l, DVariant::plus_alpha);
            CMatrix core_l = d_odd.left * d_even.left;
            CMatrix core_r = d_even.right * d_odd.right;
            CMatrix wl = l == 0 ? core_l : block_diag({CMatrix::identity(l * q), core_l});
            CMatrix wr = l == 0 ? core_r : block_diag({CMatrix::identity(l * q), core_r});
            wwl = wl * wwl;
            wwr = wwr * wr;
        }
        CMatrix lhs = wwl * hankel_block(pre, HankelKind::Halpha, n) * wwr;
        std::vector<CMatrix> heads;
        for (std::size_t k = 0; k + 1 <= n; ++k) heads.push_back(chain[2 * k + 1].at(0));
        heads.push_back(chain[2 * n + 1].at(0)
                        + defect_matrices(pre, 2 * n + 1, 2 * n + 1).Z.value());
        pr.equal(at_n("(b)", n), lhs, block_diag(heads));
        if (extendability_test(pre)) {
            heads.back() = chain[2 * n + 1].at(0);
            pr.equal(at_n("(c)", n), lhs, block_diag(heads));
        }
    }
    return pr.finish("no n with 2n+1 <= kappa and K_nnd (2n+1)-prefix");
}

IdentityCheck chk_T1016(const MatSeq& s)
{
    Probe pr("T1016");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(s).verdicts.at("K_nnd")) return pr.finish("not in K_nnd");
    Parametrization par = parametrize(s);
    const std::size_t m = s.size() - 1;
    for (std::size_t j = 0; j < m; ++j)
        pr.equal(at_j("clean value", j), par.Q[j], schurk(s, j).at(0));
    pr.equal("boundary value", par.Q[m],
             schurk(s, m).at(0) + defect_matrices(s, m, m).Z.value());
    return pr.finish("sequence is empty");
}

IdentityCheck chk_T1615(const MatSeq& s)
{
    Probe pr("T1615");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(s).verdicts.at("K_nnd_ext")) return pr.finish("not extendable");
    Parametrization par = parametrize(s);
    for (std::size_t j = 0; j < s.size(); ++j)
        pr.equal(at_j("Schur value", j), par.Q[j], schurk(s, j).at(0));
    return pr.finish("sequence is empty");
}

IdentityCheck chk_T1000(const MatSeq& s)
{
    Probe pr("T1000");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(s).verdicts.at("K_nnd")) return pr.finish("not in K_nnd");
    Parametrization base = parametrize(s);
    const std::size_t m = s.size() - 1;
    for (std::size_t k = 0; k <= m; ++k) {
        Parametrization shifted = parametrize(schurk(s, k));
        for (std::size_t j = 0; j + k + 1 <= m; ++j)
            pr.equal(at_j("clean value after " + std::to_string(k) + " steps", j),
                     shifted.Q[j], base.Q[k + j]);
        pr.equal("boundary value after " + std::to_string(k) + " steps",
                 shifted.Q[m - k], base.Q[m] - defect_matrices(s, k, m).Z.value());
    }
    return pr.finish("sequence is empty");
}

IdentityCheck chk_T1658(const MatSeq& s)
{
    Probe pr("T1658");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(s).verdicts.at("K_nnd_ext")) return pr.finish("not extendable");
    Parametrization base = parametrize(s);
    const std::size_t m = s.size() - 1;
    for (std::size_t k = 0; k <= m; ++k) {
        Parametrization shifted = parametrize(schurk(s, k));
        for (std::size_t j = 0; j + k <= m; ++j)
            pr.equal(at_j("value after " + std::to_string(k) + " steps", j),
                     shifted.Q[j], base.Q[k + j]);
    }
    return pr.finish("sequence is empty");
}

std::string class_witness(const ClassReport& rep, const std::string& key)
{
    auto it = rep.witnesses.find(key);
    return it == rep.witnesses.end() ? std::string() : it->second;
}

IdentityCheck chk_P1546(const MatSeq& s)
{
    Probe pr("P1546");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    if (s.kappa() < 1) return pr.finish("needs kappa >= 1");
    ClassReport rep = classify(s);
    if (!rep.verdicts.at("K_nnd")) return pr.finish("not in K_nnd");
    ClassReport after = classify(schur1(s));
    pr.require("(a) K_nnd preserved", after.verdicts.at("K_nnd"),
               class_witness(after, "K_nnd"));
    if (rep.verdicts.at("K_nnd_ext"))
        pr.require("(b) extendability preserved", after.verdicts.at("K_nnd_ext"),
                   class_witness(after, "K_nnd_ext"));
    if (rep.verdicts.at("K_pd"))
        pr.require("(c) K_pd preserved", after.verdicts.at("K_pd"),
                   class_witness(after, "K_pd"));
    for (long m = 0; m <= s.kappa(); ++m) {
        std::string from = "K_cd_order_" + std::to_string(m);
        if (!rep.verdicts.at(from)) continue;
        std::string to = "K_cd_order_" + std::to_string(max0(m - 1));
        pr.require("(d) " + from + " drops to " + to, after.verdicts.at(to),
                   class_witness(after, to));
    }
    if (rep.verdicts.at("K_cd"))
        pr.require("(e) complete degeneracy preserved", after.verdicts.at("K_cd"),
                   class_witness(after, "K_cd"));
    return pr.finish("not in K_nnd");
}

IdentityCheck chk_P1410(const MatSeq& s)
{
    Probe pr("P1410");
    if (s.p() != s.q()) return pr.finish("p != q");
    if (!s.alpha_is_real()) return pr.finish("alpha is not real");
    if (s.kappa() < 1) return pr.finish("needs kappa >= 1");
    ClassReport rep = classify(s);
    if (!rep.verdicts.at("K_nnd")) return pr.finish("not in K_nnd");
    for (std::size_t k = 1; static_cast<long>(k) <= s.kappa(); ++k) {
        ClassReport after = classify(schurk(s, k));
        std::string steps = " after " + std::to_string(k) + " steps";
        pr.require("(a) K_nnd preserved" + steps, after.verdicts.at("K_nnd"),
                   class_witness(after, "K_nnd"));
        if (rep.verdicts.at("K_nnd_ext"))
            pr.require("(b) extendability preserved" + steps,
                       after.verdicts.at("K_nnd_ext"), class_witness(after, "K_nnd_ext"));
        if (rep.verdicts.at("K_pd"))
            pr.require("(c) K_pd preserved" + steps, after.verdicts.at("K_pd"),
                       class_witness(after, "K_pd"));
        for (long m = 0; m <= s.kappa(); ++m) {
            std::string from = "K_cd_order_" + std::to_string(m);
            if (!rep.verdicts.at(from)) continue;
            std::string to =
                "K_cd_order_" + std::to_string(max0(m - static_cast<long>(k)));
            pr.require("(d) " + from + " drops to " + to + steps,
                       after.verdicts.at(to), class_witness(after, to));
        }
        if (rep.verdicts.at("K_cd"))
            pr.require("(e) complete degeneracy preserved" + steps,
                       after.verdicts.at("K_cd"), class_witness(after, "K_cd"));
    }
    return pr.finish("not in K_nnd");
}

IdentityCheck chk_P1313(const MatSeq& s)
{
    Probe pr("P1313");
    if (!in_D(s, s.kappa())) return pr.finish("not first-term dominant");
    MatSeq round = schur1(inverse1(s, s.at(0)));
    for (std::size_t j = 0; j < s.size(); ++j)
        pr.equal(at_j("member", j), round.at(j), s.at(j));
    return pr.finish("sequence is empty");
}

IdentityCheck chk_P0930(const MatSeq& s)
{
    Probe pr("P0930");
    if (s.kappa() < 1) return pr.finish("needs kappa >= 1");
    if (!in_D(s, s.kappa())) return pr.finish("not first-term dominant");
    MatSeq round = inverse1(schur1(s), s.at(0));
    for (std::size_t j = 0; j < s.size(); ++j)
        pr.equal(at_j("member", j), round.at(j), s.at(j));
    return pr.finish("sequence is empty");
}

IdentityCheck chk_P1052(const MatSeq& t)
{
    Probe pr("P1052");
    const std::size_t p = t.p();
    const std::size_t q = t.q();
    const CMatrix& a0 = t.at(0);
    MatSeq ss = inverse1(t, a0);
    const long kt = t.kappa();
    pr.equal("(a)", hankel_block(ss, HankelKind::H, 0), a0);
    for (std::size_t n = 1; static_cast<long>(2 * n - 1) <= kt; ++n) {
        DPair dp = d_matrices(ss, n, DVariant::plain);
        pr.equal_scalar(at_n("(b) unit left determinant", n), det(dp.left),
                        GaussRational(1));
        pr.equal_scalar(at_n("(b) unit right determinant", n), det(dp.right),
                        GaussRational(1));
        CMatrix proj_l = kron(CMatrix::identity(n), a0 * pinv(a0));
        CMatrix proj_r = kron(CMatrix::identity(n), pinv(a0) * a0);
        CMatrix inner = proj_l * hankel_block(t, HankelKind::Halpha, n - 1) * proj_r;
        pr.equal(at_n("(b) factorization", n), hankel_block(ss, HankelKind::H, n),
                 inverse(dp.left) * block_diag({a0, inner}) * inverse(dp.right));
        pr.equal_rank(at_n("(b) rank split", n), rank(hankel_block(ss, HankelKind::H, n)),
                      rank(a0) + rank(inner));
        if (p == q)
            pr.equal_scalar(at_n("(b) determinant split", n),
                            det(hankel_block(ss, HankelKind::H, n)),
                            det(a0) * det(hankel_block(t, HankelKind::Halpha, n - 1)));
    }
    for (std::size_t n = 0; static_cast<long>(2 * n) <= kt; ++n) {
        DPair dp = d_matrices(ss, n, DVariant::plus_alpha);
        CMatrix proj_l = kron(CMatrix::identity(n + 1), a0 * pinv(a0));
        CMatrix proj_r = kron(CMatrix::identity(n + 1), pinv(a0) * a0);
        pr.equal(at_n("(c) factorization", n), hankel_block(ss, HankelKind::Halpha, n),
                 inverse(dp.left) * proj_l * hankel_block(t, HankelKind::H, n) * proj_r
                     * inverse(dp.right));
        if (p == q)
            pr.equal_scalar(at_n("(c) determinant split", n),
                            det(hankel_block(ss, HankelKind::Halpha, n)),
                            det(a0) * pinv(det(a0)) * det(hankel_block(t, HankelKind::H, n)));
    }
    return pr.finish("sequence is empty");
}

IdentityCheck chk_C1036(const MatSeq& t)
{
    Probe pr("C1036");
    const std::size_t p = t.p();
    const std::size_t q = t.q();
    if (!in_D(t, t.kappa()))
        return pr.finish("t_0 does not dominate every member (choosing A = t_0)");
    const CMatrix& a0 = t.at(0);
    MatSeq ss = inverse1(t, a0);
    const long kt = t.kappa();
    for (std::size_t n = 1; static_cast<long>(2 * n - 1) <= kt; ++n) {
        DPair dp = d_matrices(ss, n, DVariant::plain);
        CMatrix ha = hankel_block(t, HankelKind::Halpha, n - 1);
        pr.equal(at_n("factorization", n), hankel_block(ss, HankelKind::H, n),
                 inverse(dp.left) * block_diag({a0, ha}) * inverse(dp.right));
        pr.equal_rank(at_n("rank split", n), rank(hankel_block(ss, HankelKind::H, n)),
                      rank(a0) + rank(ha));
        if (p == q)
            pr.equal_scalar(at_n("determinant split", n),
                            det(hankel_block(ss, HankelKind::H, n)), det(a0) * det(ha));
    }
    for (std::size_t n = 0; static_cast<long>(2 * n) <= kt; ++n) {
        DPair dp = d_matrices(ss, n, DVariant::plus_alpha);
        CMatrix h = hankel_block(t, HankelKind::H, n);
        pr.equal(at_n("shifted factorization", n),
                 hankel_block(ss, HankelKind::Halpha, n),
                 inverse(dp.left) * h * inverse(dp.right));
        pr.equal_rank(at_n("shifted rank", n),
                      rank(hankel_block(ss, HankelKind::Halpha, n)), rank(h));
        if (p == q)
            pr.equal_scalar(at_n("shifted determinant", n),
                            det(hankel_block(ss, HankelKind::Halpha, n)),
                            det(a0) * pinv(det(a0)) * det(h));
    }
    return pr.finish("sequence is empty");
}

struct InverseCase {
    std::string label;
    CMatrix a;
};

std::vector<InverseCase> inverse_candidates(const MatSeq& t)
{
    return {{"A = t_0", t.at(0)}, {"A = I", CMatrix::identity(t.q())}};
}

IdentityCheck chk_P1539(const MatSeq& t)
{
    Probe pr("P1539");
    if (t.p() != t.q()) return pr.finish("p != q");
    if (!t.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(t).verdicts.at("K_nnd")) return pr.finish("not in K_nnd");
    for (const InverseCase& c : inverse_candidates(t)) {
        ClassReport rep = classify(inverse1(t, c.a));
        pr.require("K_nnd preserved with " + c.label, rep.verdicts.at("K_nnd"),
                   class_witness(rep, "K_nnd"));
    }
    return pr.finish("not in K_nnd");
}

IdentityCheck chk_P1555(const MatSeq& t)
{
    Probe pr("P1555");
    if (t.p() != t.q()) return pr.finish("p != q");
    if (!t.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(t).verdicts.at("K_nnd_ext")) return pr.finish("not extendable");
    for (const InverseCase& c : inverse_candidates(t)) {
        ClassReport rep = classify(inverse1(t, c.a));
        pr.require("extendability preserved with " + c.label,
                   rep.verdicts.at("K_nnd_ext"), class_witness(rep, "K_nnd_ext"));
    }
    return pr.finish("not extendable");
}

IdentityCheck chk_P1615(const MatSeq& t)
{
    Probe pr("P1615");
    if (t.p() != t.q()) return pr.finish("p != q");
    if (!t.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(t).verdicts.at("K_pd")) return pr.finish("not in K_pd");
    for (const InverseCase& c : inverse_candidates(t)) {
        ClassReport rep = classify(inverse1(t, c.a));
        pr.require("K_pd preserved with " + c.label, rep.verdicts.at("K_pd"),
                   class_witness(rep, "K_pd"));
    }
    return pr.finish("not in K_pd");
}

IdentityCheck chk_P1459(const MatSeq& t)
{
    Probe pr("P1459");
    if (t.p() != t.q()) return pr.finish("p != q");
    if (!t.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(t).verdicts.at("K_cd")) return pr.finish("not completely degenerate");
    for (const InverseCase& c : inverse_candidates(t)) {
        if (t.kappa() >= 2 && !kernel_included(c.a, t.at(0))) continue;
        ClassReport rep = classify(inverse1(t, c.a));
        pr.require("complete degeneracy preserved with " + c.label,
                   rep.verdicts.at("K_cd"), class_witness(rep, "K_cd"));
    }
    return pr.finish("Ker A not inside Ker t_0 for any candidate A");
}

IdentityCheck chk_P0915(const MatSeq& t)
{
    Probe pr("P0915");
    if (t.p() != t.q()) return pr.finish("p != q");
    if (!t.alpha_is_real()) return pr.finish("alpha is not real");
    ClassReport rep = classify(t);
    bool any = false;
    for (long m = 0; m <= t.kappa(); ++m) {
        std::string from = "K_cd_order_" + std::to_string(m);
        if (!rep.verdicts.at(from)) continue;
        any = true;
        for (const InverseCase& c : inverse_candidates(t)) {
            if (m >= 2 && !kernel_included(c.a, t.at(0))) continue;
            ClassReport after = classify(inverse1(t, c.a));
            std::string to = "K_cd_order_" + std::to_string(m + 1);
            pr.require(from + " lifts to " + to + " with " + c.label,
                       after.verdicts.at(to), class_witness(after, to));
        }
    }
    return pr.finish(any ? "Ker A not inside Ker t_0 for any candidate A"
                         : "no degenerate order m with prefix in K_cd");
}

IdentityCheck chk_T1331(const MatSeq& t)
{
    Probe pr("T1331");
    if (t.p() != t.q()) return pr.finish("p != q");
    if (!t.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(t).verdicts.at("K_nnd")) return pr.finish("not in K_nnd");
    const std::size_t m = t.size() - 1;
    Parametrization base = parametrize(t);
    for (const InverseCase& c : inverse_candidates(t)) {
        if (!kernel_included(c.a, t.at(0)) || !kernel_included(c.a, t.at(m))) continue;
        Parametrization lifted = parametrize(inverse1(t, c.a));
        pr.equal("leading value with " + c.label, lifted.Q[0], c.a);
        for (std::size_t j = 0; j <= m; ++j)
            pr.equal(at_j("shifted value with " + c.label, j), lifted.Q[j + 1],
                     base.Q[j]);
    }
    return pr.finish("Ker A not inside Ker t_0 and Ker t_top for any candidate A");
}

IdentityCheck chk_T0957(const MatSeq& t)
{
    Probe pr("T0957");
    if (t.p() != t.q()) return pr.finish("p != q");
    if (!t.alpha_is_real()) return pr.finish("alpha is not real");
    if (!classify(t).verdicts.at("K_nnd_ext")) return pr.finish("not extendable");
    Parametrization base = parametrize(t);
    for (const InverseCase& c : inverse_candidates(t)) {
        if (!kernel_included(c.a, t.at(0))) continue;
        Parametrization lifted = parametrize(inverse1(t, c.a));
        pr.equal("leading value with " + c.label, lifted.Q[0], c.a);
        for (std::size_t j = 0; j < t.size(); ++j)
            pr.equal(at_j("shifted value with " + c.label, j), lifted.Q[j + 1],
                     base.Q[j]);
    }
    return pr.finish("Ker A not inside Ker t_0 for any candidate A");
}

struct CatalogEntry {
    const char* name;
    IdentityCheck (*check)(const MatSeq&);
};

constexpr CatalogEntry kCatalog[] = {
    {"L1445", chk_L1445}, {"L1453", chk_L1453}, {"P1256", chk_P1256},
    {"L1606", chk_L1606}, {"L1438", chk_L1438}, {"T2047", chk_T2047},
    {"T1640", chk_T1640}, {"T1701", chk_T1701}, {"P1620", chk_P1620},
    {"L1513", chk_L1513}, {"L1104", chk_L1104}, {"L1611", chk_L1611},
    {"L1548", chk_L1548}, {"L1545", chk_L1545}, {"L1705", chk_L1705},
    {"L1441", chk_L1441}, {"L1007", chk_L1007}, {"L1440", chk_L1440},
    {"L1306", chk_L1306}, {"T1016", chk_T1016}, {"T1615", chk_T1615},
    {"T1000", chk_T1000}, {"T1658", chk_T1658}, {"P1546", chk_P1546},
    {"P1410", chk_P1410}, {"P1313", chk_P1313}, {"P0930", chk_P0930},
    {"P1052", chk_P1052}, {"C1036", chk_C1036}, {"P1539", chk_P1539},
    {"P1555", chk_P1555}, {"P1615", chk_P1615}, {"P1459", chk_P1459},
    {"P0915", chk_P0915}, {"T1331", chk_T1331}, {"T0957", chk_T0957},
};

} // namespace

const std::vector<std::string>& identity_catalog()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const CatalogEntry& e : kCatalog) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

IdentityCheck check_identity(const std::string& name, const MatSeq& s)
{
    for (const CatalogEntry& e : kCatalog) {
        if (name == e.name) {
            if (s.size() == 0) return {name, "inapplicable", "sequence is empty", {}};
            return e.check(s);
        }
    }
    throw error("unknown-identity", name);
}

SuiteSummary run_suite(const SuiteConfig& config)
{
    SuiteConfig cfg = config;
    if (cfg.q_values.empty()) cfg.q_values = {1, 2, 3};
    if (cfg.lengths.empty()) cfg.lengths = {0, 1, 2, 3, 4, 5, 6, 7};
    if (cfg.alphas.empty()) cfg.alphas = {Rational(-1), Rational(0), Rational(1, 2)};
    if (cfg.classes.empty()) cfg.classes = {"K_nnd_ext", "K_pd", "K_nnd", "K_cd"};

    const std::vector<std::string>& known = identity_catalog();
    for (const std::string& name : cfg.catalog)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw error("invalid-config", "unknown identity " + name + " in catalog subset");
    for (const std::string& cls : cfg.classes)
        if (cls != "K_nnd_ext" && cls != "K_pd" && cls != "K_nnd" && cls != "K_cd")
            throw error("invalid-config", "unknown class " + cls);
    for (std::size_t q : cfg.q_values)
        if (q == 0) throw error("invalid-config", "matrix size q must be positive");

    SuiteSummary summary;
    summary.trials = cfg.trials;
    for (const std::string& name : cfg.catalog) {
        summary.pass[name] = 0;
        summary.fail[name] = 0;
        summary.inapplicable[name] = 0;
    }

    std::mt19937_64 eng(cfg.seed);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        std::size_t q = cfg.q_values[eng() % cfg.q_values.size()];
        std::size_t len = cfg.lengths[eng() % cfg.lengths.size()];
        Rational alpha = cfg.alphas[eng() % cfg.alphas.size()];
        std::string cls = cfg.classes[eng() % cfg.classes.size()];
        if (cls == "K_nnd" && len == 0) len = 1;
        std::uint64_t sub_seed = eng();
        MatSeq s = random_in_class(cls, q, len, alpha, sub_seed);
        for (const std::string& name : cfg.catalog) {
            IdentityCheck result = check_identity(name, s);
            if (result.status == "pass") {
                ++summary.pass[name];
            } else if (result.status == "inapplicable") {
                ++summary.inapplicable[name];
            } else {
                ++summary.fail[name];
                summary.failures.push_back({name, result.detail, trial, s});
            }
        }
    }
    return summary;
}

} // namespace stieltjes
