#include "stieltjes/gen.hpp"

#include <random>
#include <utility>

#include "stieltjes/classify.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/linalg.hpp"
#include "stieltjes/parametrize.hpp"

namespace stieltjes {

namespace {

std::uint64_t draw(std::mt19937_64& eng, std::uint64_t n)
{
    return eng() % n;
}

Rational rand_rational(std::mt19937_64& eng, long lo, long hi, long max_den)
{
    long num = lo + static_cast<long>(draw(eng, static_cast<std::uint64_t>(hi - lo + 1)));
    long den = 1 + static_cast<long>(draw(eng, static_cast<std::uint64_t>(max_den)));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

CMatrix rand_matrix(std::mt19937_64& eng, std::size_t rows, std::size_t cols)
{
    CMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a.at(i, j) = GaussRational(rand_rational(eng, -4, 4, 4), rand_rational(eng, -4, 4, 4));
    return a;
}

CMatrix rand_psd(std::mt19937_64& eng, std::size_t q)
{
    CMatrix b = rand_matrix(eng, q, q);
    return b.conj_transpose() * b;
}

CMatrix rand_pd(std::mt19937_64& eng, std::size_t q)
{
    CMatrix b = rand_matrix(eng, q, q);
    return b.conj_transpose() * b + CMatrix::identity(q);
}

MatSeq draw_extendable(std::mt19937_64& eng, std::size_t q, std::size_t len, const Rational& alpha)
{
    DiscreteMeasure mu;
    mu.alpha = alpha;
    std::size_t n_atoms = 1 + draw(eng, 3);
    for (std::size_t k = 0; k < n_atoms; ++k)
        mu.atoms.push_back({alpha + rand_rational(eng, 0, 16, 16), rand_psd(eng, q)});
    return moments(mu, len);
}

MatSeq draw_pd(std::mt19937_64& eng, std::size_t q, std::size_t len, const Rational& alpha)
{
    DiscreteMeasure mu;
    mu.alpha = alpha;
    std::size_t n_atoms = (len + 1) / 2 + 1;
    for (std::size_t k = 0; k < n_atoms; ++k) {
        long den = 1 + static_cast<long>(draw(eng, 16));
        long num = 1 + static_cast<long>(draw(eng, static_cast<std::uint64_t>(den)));
        Rational off(num, den);
        off.canonicalize();
        mu.atoms.push_back({alpha + Rational(static_cast<long>(k)) + off, rand_pd(eng, q)});
    }
    return moments(mu, len);
}

// A sequence whose parametrization pinches to zero at Q_{len-1} and comes
// back positive at Q_len is in K_nnd with no extension.
MatSeq draw_stuck(std::mt19937_64& eng, std::size_t q, std::size_t len, const Rational& alpha)
{
    Parametrization par;
    par.alpha = GaussRational(alpha);
    par.p = q;
    par.q = q;
    for (std::size_t j = 0; j + 1 < len; ++j)
        par.Q.push_back(rand_pd(eng, q));
    par.Q.push_back(CMatrix::zero(q, q));
    par.Q.push_back(rand_pd(eng, q));
    return reconstruct(par);
}

MatSeq direct_sum(const MatSeq& a, const MatSeq& b)
{
    std::vector<CMatrix> mats;
    for (std::size_t j = 0; j < a.size(); ++j)
        mats.push_back(block_diag({a.at(j), b.at(j)}));
    return MatSeq(a.p() + b.p(), a.q() + b.q(), a.alpha(), mats);
}

MatSeq draw_nonextendable(std::mt19937_64& eng, std::size_t q, std::size_t len, const Rational& alpha)
{
    if (q >= 2 && draw(eng, 2) == 0) {
        std::size_t q1 = 1 + draw(eng, q - 1);
        MatSeq stuck = draw_stuck(eng, q1, len, alpha);
        MatSeq free_part = draw_extendable(eng, q - q1, len, alpha);
        return direct_sum(stuck, free_part);
    }
    return draw_stuck(eng, q, len, alpha);
}

MatSeq draw_completely_degenerate(std::mt19937_64& eng, std::size_t q, std::size_t len,
                                  const Rational& alpha)
{
    DiscreteMeasure mu;
    mu.alpha = alpha;
    if (len == 0) {
        mu.atoms.push_back({alpha, CMatrix::zero(q, q)});
    } else if (len == 1) {
        mu.atoms.push_back({alpha, rand_psd(eng, q)});
    } else {
        mu.atoms.push_back({alpha + rand_rational(eng, 0, 16, 16), rand_psd(eng, q)});
    }
    return moments(mu, len);
}

bool hits_class(const MatSeq& s, const std::string& cls)
{
    ClassReport rep = classify(s);
    if (cls == "K_nnd_ext")
        return rep.verdicts.at("K_nnd_ext");
    if (cls == "K_pd")
        return rep.verdicts.at("K_pd");
    if (cls == "K_cd")
        return rep.verdicts.at("K_cd");
    return rep.verdicts.at("K_nnd") && !rep.verdicts.at("K_nnd_ext");
}

} // namespace

MatSeq moments(const DiscreteMeasure& mu, std::size_t m)
{
    if (mu.atoms.empty())
        throw error("invalid-measure", "a measure needs at least one atom to fix its matrix size");
    std::size_t q = mu.atoms.front().weight.rows();
    for (const Atom& atom : mu.atoms) {
        if (!atom.weight.is_square() || atom.weight.rows() != q)
            throw error("invalid-measure", "atom weights must all be square of one size");
        if (!is_psd(atom.weight))
            throw error("invalid-measure", "atom weight at " + rational_to_string(atom.point)
                                               + " is not psd");
        if (atom.point < mu.alpha)
            throw error("invalid-measure", "atom at " + rational_to_string(atom.point)
                                               + " lies left of alpha = "
                                               + rational_to_string(mu.alpha));
    }
    std::vector<CMatrix> mats(m + 1, CMatrix::zero(q, q));
    for (const Atom& atom : mu.atoms) {
        Rational pw(1);
        for (std::size_t j = 0; j <= m; ++j) {
            mats[j] = mats[j] + GaussRational(pw) * atom.weight;
            pw *= atom.point;
        }
    }
    return MatSeq(q, q, GaussRational(mu.alpha), mats);
}

MatSeq random_in_class(const std::string& cls, std::size_t q, std::size_t len,
                       const Rational& alpha, std::uint64_t seed)
{
    if (q == 0)
        throw error("invalid-config", "matrix size q must be positive");
    if (cls != "K_nnd_ext" && cls != "K_pd" && cls != "K_nnd" && cls != "K_cd")
        throw error("unknown-class", cls);
    if (cls == "K_nnd" && len == 0)
        throw error("invalid-config",
                    "every K_nnd sequence with kappa = 0 is extendable; use K_nnd_ext");

    std::mt19937_64 eng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        MatSeq s = [&] {
            if (cls == "K_nnd_ext")
                return draw_extendable(eng, q, len, alpha);
            if (cls == "K_pd")
                return draw_pd(eng, q, len, alpha);
            if (cls == "K_cd")
                return draw_completely_degenerate(eng, q, len, alpha);
            return draw_nonextendable(eng, q, len, alpha);
        }();
        if (hits_class(s, cls))
            return s;
    }
    throw error("resampling-budget-exhausted",
                "no " + cls + " hit in 1000 draws from seed " + std::to_string(seed));
}

} // namespace stieltjes
