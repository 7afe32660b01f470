#include "stieltjes/classify.hpp"

#include <charconv>
#include <optional>

#include "stieltjes/builders.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/linalg.hpp"

namespace stieltjes {

namespace {

void require_classifiable(const MatSeq& s) {
    if (!s.alpha_is_real())
        throw error("non-real-alpha",
                    "classification needs a real alpha, got " + to_string(s.alpha()));
    if (s.kappa() < 0)
        throw error("sequence-too-short", "classification needs at least s_0");
}

// Smallest n with H_n not psd (strict: not pd), if any.
std::optional<std::string> hankel_failure(const MatSeq& s, bool strict) {
    for (std::size_t n = 0; static_cast<long>(2 * n) <= s.kappa(); ++n) {
        const CMatrix h = hankel_block(s, HankelKind::H, n);
        if (strict ? !is_pd(h) : !is_psd(h))
            return "H_" + std::to_string(n) +
                   (strict ? " is not positive definite" : " is not positive semidefinite");
    }
    return std::nullopt;
}

// First failing block of the interleaved chain H_0, H_alpha_0, H_1,
// H_alpha_1, ... ordered by top moment index.
std::optional<std::string> stieltjes_failure(const MatSeq& s, bool strict) {
    for (long j = 0; j <= s.kappa(); ++j) {
        const std::size_t n = static_cast<std::size_t>(j / 2);
        const bool even = j % 2 == 0;
        const CMatrix h = hankel_block(s, even ? HankelKind::H : HankelKind::Halpha, n);
        if (strict ? !is_pd(h) : !is_psd(h))
            return (even ? "H_" : "H_alpha_") + std::to_string(n) +
                   (strict ? " is not positive definite" : " is not positive semidefinite");
    }
    return std::nullopt;
}

// The completely degenerate condition for a length-m prefix: L_{m/2} = 0
// when m is even, L_alpha_{(m-1)/2} = 0 when m is odd.  Both depend only
// on s_0, ..., s_m, so no explicit prefix is taken.
std::optional<std::string> degeneracy_failure(const MatSeq& s, long m) {
    const std::size_t n = static_cast<std::size_t>(m / 2);
    if (m % 2 == 0) {
        if (!schur_L(s, n).is_zero())
            return "L_" + std::to_string(n) + " != 0";
    } else {
        if (!schur_L_alpha(s, n).is_zero())
            return "L_alpha_" + std::to_string(n) + " != 0";
    }
    return std::nullopt;
}

// First j violating first-term domination among s_0, ..., s_top.
std::optional<std::string> domination_failure(const MatSeq& s, long top) {
    const CMatrix s0 = s.at(0);
    const CMatrix s0_dag = pinv(s0);
    const CMatrix left = s0 * s0_dag;
    const CMatrix right = s0_dag * s0;
    for (long j = 1; j <= top; ++j) {
        const CMatrix& sj = s.at(static_cast<std::size_t>(j));
        if (sj * right != sj)
            return "Ker s_0 is not contained in Ker s_" + std::to_string(j);
        if (left * sj != sj)
            return "Ran s_" + std::to_string(j) + " is not contained in Ran s_0";
    }
    return std::nullopt;
}

std::optional<std::string> extendability_failure(const MatSeq& s) {
    const long kappa = s.kappa();
    if (kappa == 0)
        return std::nullopt;
    if (kappa % 2 == 1) {
        const std::size_t n = static_cast<std::size_t>((kappa - 1) / 2);
        if (!kernel_included(schur_L(s, n), schur_L_alpha(s, n)))
            return "Ker L_" + std::to_string(n) + " is not contained in Ker L_alpha_" +
                   std::to_string(n);
    } else {
        const std::size_t n = static_cast<std::size_t>(kappa / 2);
        if (!kernel_included(schur_L_alpha(s, n - 1), schur_L(s, n)))
            return "Ker L_alpha_" + std::to_string(n - 1) + " is not contained in Ker L_" +
                   std::to_string(n);
    }
    return std::nullopt;
}

} // namespace

ClassReport classify(const MatSeq& s) {
    require_classifiable(s);
    const long kappa = s.kappa();

    ClassReport rep;
    auto set = [&rep](const std::string& name, const std::optional<std::string>& fail) {
        rep.verdicts[name] = !fail.has_value();
        if (fail)
            rep.witnesses[name] = *fail;
    };

    if (s.p() != s.q()) {
        const std::optional<std::string> not_square("p != q");
        set("H_nnd", not_square);
        set("H_pd", not_square);
        set("K_nnd", not_square);
        set("K_pd", not_square);
        set("K_nnd_ext", not_square);
        set("K_cd", not_square);
        for (long m = 0; m <= kappa; ++m)
            set("K_cd_order_" + std::to_string(m), not_square);
    } else {
        set("H_nnd", hankel_failure(s, false));
        set("H_pd", hankel_failure(s, true));

        const auto nnd_fail = stieltjes_failure(s, false);
        set("K_nnd", nnd_fail);
        set("K_pd", stieltjes_failure(s, true));

        auto under_nnd = [&nnd_fail](std::optional<std::string> fail) {
            if (nnd_fail)
                return std::optional<std::string>("not in K_nnd (" + *nnd_fail + ")");
            return fail;
        };
        set("K_nnd_ext", under_nnd(extendability_failure(s)));
        set("K_cd", under_nnd(degeneracy_failure(s, kappa)));
        for (long m = 0; m <= kappa; ++m)
            set("K_cd_order_" + std::to_string(m), under_nnd(degeneracy_failure(s, m)));
    }

    set("D", domination_failure(s, kappa));
    set("D_tilde", kappa == 0 ? std::nullopt : domination_failure(s, kappa - 1));
    return rep;
}

bool extendability_test(const MatSeq& s) {
    require_classifiable(s);
    if (s.p() != s.q() || stieltjes_failure(s, false))
        return false;
    return !extendability_failure(s).has_value();
}

bool is_member(const MatSeq& s, const std::string& cls) {
    if (cls == "K_nnd_ext")
        return extendability_test(s);
    const ClassReport rep = classify(s);
    const auto it = rep.verdicts.find(cls);
    if (it != rep.verdicts.end())
        return it->second;

    const std::string order_prefix = "K_cd_order_";
    if (cls.rfind(order_prefix, 0) == 0) {
        const char* first = cls.data() + order_prefix.size();
        const char* last = cls.data() + cls.size();
        unsigned long m = 0;
        const auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec == std::errc() && ptr == last &&
            "K_cd_order_" + std::to_string(m) == cls)
            throw error("index-out-of-range",
                        cls + " needs m <= kappa = " + std::to_string(s.kappa()));
    }
    throw error("unknown-class", cls);
}

} // namespace stieltjes
