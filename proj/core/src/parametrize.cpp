#include "stieltjes/parametrize.hpp"

#include <utility>

#include "stieltjes/builders.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/linalg.hpp"
#include "stieltjes/transforms.hpp"

namespace stieltjes {

namespace {

std::string tag_for(long j) {
    return (j % 2 == 0 ? "L_" : "L_alpha_") + std::to_string(j / 2);
}

void require_k_nnd(const MatSeq& s, const std::string& what) {
    const ClassReport rep = classify(s);
    if (!rep.verdicts.at("K_nnd"))
        throw error("not-in-K_nnd", what + ": " + rep.witnesses.at("K_nnd"));
}

CMatrix compression_defect(const CMatrix& t0, const CMatrix& tj) {
    const CMatrix dag = pinv(t0);
    return tj - t0 * dag * tj * dag * t0;
}

// chain[r] = schurk(s, r) for r = 0, ..., kappa.
std::vector<MatSeq> schur_chain(const MatSeq& s) {
    std::vector<MatSeq> chain;
    chain.reserve(static_cast<std::size_t>(s.kappa()) + 1);
    chain.push_back(s);
    for (long r = 1; r <= s.kappa(); ++r)
        chain.push_back(schur1(chain.back()));
    return chain;
}

// s_0^(j,alpha) + Z_{j,j}, the factor closing the block at top index j.
CMatrix boundary_value(const std::vector<MatSeq>& chain, long j) {
    CMatrix value = chain[static_cast<std::size_t>(j)].at(0);
    for (long r = 0; r < j; ++r) {
        const MatSeq& t = chain[static_cast<std::size_t>(r)];
        value = value + compression_defect(t.at(0), t.at(static_cast<std::size_t>(j - r)));
    }
    return value;
}

} // namespace

Parametrization parametrize(const MatSeq& s) {
    Parametrization par;
    par.alpha = s.alpha();
    par.p = s.p();
    par.q = s.q();
    for (long j = 0; j <= s.kappa(); ++j) {
        const std::size_t n = static_cast<std::size_t>(j / 2);
        par.Q.push_back(j % 2 == 0 ? schur_L(s, n) : schur_L_alpha(s, n));
        par.provenance.push_back(tag_for(j));
    }
    return par;
}

MatSeq reconstruct(const Parametrization& par) {
    std::vector<CMatrix> mats;
    mats.reserve(par.Q.size());
    for (std::size_t j = 0; j < par.Q.size(); ++j) {
        const CMatrix& qj = par.Q[j];
        if (qj.rows() != par.p || qj.cols() != par.q)
            throw error("shape-mismatch",
                        "Q_" + std::to_string(j) + " is " + std::to_string(qj.rows()) + "x" +
                            std::to_string(qj.cols()) + ", expected " + std::to_string(par.p) +
                            "x" + std::to_string(par.q));
        const MatSeq prefix(par.p, par.q, par.alpha, mats);
        const std::size_t n = j / 2;
        if (j % 2 == 0)
            mats.push_back(schur_Theta(prefix, n) + qj);
        else
            mats.push_back(par.alpha * mats.back() + schur_Theta_alpha(prefix, n) + qj);
    }
    return MatSeq(par.p, par.q, par.alpha, std::move(mats));
}

Parametrization parametrize_via_schur(const MatSeq& s) {
    require_k_nnd(s, "parametrize_via_schur");
    const long kappa = s.kappa();
    const std::vector<MatSeq> chain = schur_chain(s);

    Parametrization par;
    par.alpha = s.alpha();
    par.p = s.p();
    par.q = s.q();
    for (long j = 0; j <= kappa; ++j) {
        par.Q.push_back(j < kappa ? chain[static_cast<std::size_t>(j)].at(0)
                                  : boundary_value(chain, kappa));
        par.provenance.push_back(tag_for(j));
    }
    return par;
}

DefectPair defect_matrices(const MatSeq& s, std::size_t k, std::size_t j) {
    const long kappa = s.kappa();
    if (static_cast<long>(k) > kappa || static_cast<long>(j) > kappa)
        throw error("index-out-of-range",
                    "defect indices k = " + std::to_string(k) + ", j = " + std::to_string(j) +
                        " exceed kappa = " + std::to_string(kappa));

    DefectPair out;
    MatSeq cur = s;
    CMatrix zsum = CMatrix::zero(s.p(), s.q());
    for (std::size_t r = 0; r < k; ++r) {
        if (j >= k)
            zsum = zsum + compression_defect(cur.at(0), cur.at(j - r));
        cur = schur1(cur);
    }
    if (j >= k)
        out.Z = std::move(zsum);
    if (static_cast<long>(j + k) <= kappa)
        out.P = compression_defect(cur.at(0), cur.at(j));
    return out;
}

RankDetReport rank_det_report(const MatSeq& s) {
    require_k_nnd(s, "rank_det_report");
    const std::vector<MatSeq> chain = schur_chain(s);

    RankDetReport rep;
    for (long top = 0; top <= s.kappa(); ++top) {
        const std::size_t n = static_cast<std::size_t>(top / 2);
        RankDetRow row;
        row.block = (top % 2 == 0 ? "H_" : "H_alpha_") + std::to_string(n);

        const CMatrix lhs =
            hankel_block(s, top % 2 == 0 ? HankelKind::H : HankelKind::Halpha, n);
        row.rank_lhs = rank(lhs);
        row.det_lhs = det(lhs);

        row.det_clean = GaussRational(1);
        for (long idx = top % 2; idx < top; idx += 2) {
            const CMatrix& factor = chain[static_cast<std::size_t>(idx)].at(0);
            row.rank_clean += rank(factor);
            row.det_clean *= det(factor);
        }
        const CMatrix bound = boundary_value(chain, top);
        row.rank_boundary = rank(bound);
        row.det_boundary = det(bound);

        row.rank_match = row.rank_lhs == row.rank_clean + row.rank_boundary;
        row.det_match = row.det_lhs == row.det_clean * row.det_boundary;
        rep.all_match = rep.all_match && row.rank_match && row.det_match;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ClassReport classify_via_parametrization(const MatSeq& s) {
    if (!s.alpha_is_real())
        throw error("non-real-alpha",
                    "classification needs a real alpha, got " + to_string(s.alpha()));
    if (s.kappa() < 0)
        throw error("sequence-too-short", "classification needs at least s_0");

    ClassReport rep;
    const long kappa = s.kappa();
    auto set = [&rep](const std::string& name, const std::optional<std::string>& fail) {
        rep.verdicts[name] = !fail.has_value();
        if (fail)
            rep.witnesses[name] = *fail;
    };

    if (s.p() != s.q()) {
        const std::optional<std::string> not_square("p != q");
        set("K_nnd", not_square);
        set("K_pd", not_square);
        set("K_nnd_ext", not_square);
        set("K_cd", not_square);
        for (long m = 0; m <= kappa; ++m)
            set("K_cd_order_" + std::to_string(m), not_square);
        return rep;
    }

    const Parametrization par = parametrize(s);
    std::optional<std::string> psd_fail, pd_fail;
    for (std::size_t j = 0; j < par.Q.size(); ++j) {
        if (!psd_fail && !is_psd(par.Q[j]))
            psd_fail = "Q_" + std::to_string(j) + " is not positive semidefinite";
        if (!pd_fail && !is_pd(par.Q[j]))
            pd_fail = "Q_" + std::to_string(j) + " is not positive definite";
    }
    auto chain_fail = [&par](long upto) -> std::optional<std::string> {
        for (long j = 0; j <= upto; ++j)
            if (!kernel_included(par.Q[static_cast<std::size_t>(j)],
                                 par.Q[static_cast<std::size_t>(j) + 1]))
                return "Ker Q_" + std::to_string(j) + " is not contained in Ker Q_" +
                       std::to_string(j + 1);
        return std::nullopt;
    };

    const auto nnd_fail = psd_fail ? psd_fail : chain_fail(kappa - 2);
    set("K_nnd", nnd_fail);
    set("K_pd", pd_fail);
    set("K_nnd_ext", psd_fail ? psd_fail : chain_fail(kappa - 1));

    auto under_nnd = [&nnd_fail](std::optional<std::string> fail) {
        if (nnd_fail)
            return std::optional<std::string>("not in K_nnd (" + *nnd_fail + ")");
        return fail;
    };
    const std::vector<MatSeq> chain = schur_chain(s);
    auto degenerate_at = [&chain, kappa](long m) -> std::optional<std::string> {
        if (m == kappa) {
            if (!boundary_value(chain, kappa).is_zero())
                return "s_0^(" + std::to_string(kappa) + ",alpha) + Z_{" +
                       std::to_string(kappa) + "," + std::to_string(kappa) + "} != 0";
        } else if (!chain[static_cast<std::size_t>(m)].at(0).is_zero()) {
            return "s_0^(" + std::to_string(m) + ",alpha) != 0";
        }
        return std::nullopt;
    };

    set("K_cd", under_nnd(degenerate_at(kappa)));
    for (long m = 0; m <= kappa; ++m)
        set("K_cd_order_" + std::to_string(m), under_nnd(degenerate_at(m)));
    return rep;
}

} // namespace stieltjes
