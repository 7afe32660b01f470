// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "stieltjes/builders.hpp"
#include "stieltjes/classify.hpp"
#include "stieltjes/gen.hpp"
#include "stieltjes/linalg.hpp"
#include "stieltjes/parametrize.hpp"
#include "stieltjes/transforms.hpp"
#include "stieltjes/verify.hpp"

using namespace stieltjes;
using stieltjes::testing::e1518;
using stieltjes::testing::minor_oracle;
using stieltjes::testing::random_matrix;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(std::string why)
    {
        if (ok) {
            ok = false;
            note = std::move(why);
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::vector<Rational>& alpha_grid()
{
    static const std::vector<Rational> grid = {Rational(-1), Rational(0), Rational(1, 2)};
    return grid;
}

// Shared corpus: seeded members of every generator class over small
// shapes.  All of them are square with a real alpha and inside K_nnd.
const std::vector<MatSeq>& corpus()
{
    static const std::vector<MatSeq> all = [] {
        std::vector<MatSeq> seqs;
        std::uint64_t seed = 90000;
        for (const char* cls : {"K_nnd_ext", "K_pd", "K_nnd", "K_cd"})
            for (std::size_t q = 1; q <= 3; ++q)
                for (std::size_t len = 0; len <= 4; ++len) {
                    if (len == 0 && std::string(cls) == "K_nnd") continue;
                    for (const Rational& alpha : alpha_grid())
                        seqs.push_back(random_in_class(cls, q, len, alpha, seed++));
                }
        return seqs;
    }();
    return all;
}

bool in_dominant_class(const MatSeq& s)
{
    const CMatrix& s0 = s.at(0);
    CMatrix left = s0 * pinv(s0);
    CMatrix right = pinv(s0) * s0;
    for (long j = 0; j <= s.kappa(); ++j) {
        const CMatrix& sj = s.at(static_cast<std::size_t>(j));
        if (left * sj != sj || sj * right != sj) return false;
    }
    return true;
}

MatSeq direct_sum(const MatSeq& a, const MatSeq& b)
{
    std::vector<CMatrix> mats;
    for (long j = 0; j <= a.kappa(); ++j)
        mats.push_back(block_diag({a.at(static_cast<std::size_t>(j)),
                                   b.at(static_cast<std::size_t>(j))}));
    return MatSeq(a.p() + b.p(), a.q() + b.q(), a.alpha(), std::move(mats));
}

// Criterion 1: the three worked fixtures reproduce exactly, quickly.
Outcome criterion_fixtures()
{
    Outcome out;
    auto start = std::chrono::steady_clock::now();

    for (std::size_t q : {std::size_t{1}, std::size_t{2}}) {
        for (long a : {-1L, 0L}) {
            MatSeq s(q, q, GaussRational(a),
                     {CMatrix::zero(q, q), CMatrix::identity(q)});
            ClassReport r = classify(s);
            if (!r.verdicts.at("K_nnd")) out.fail("degenerate-head sequence left K_nnd");
            if (r.verdicts.at("K_nnd_ext")) out.fail("degenerate-head sequence extendable");
            if (r.verdicts.at("K_cd")) out.fail("degenerate-head sequence completely degenerate");
            if (!r.verdicts.at("K_cd_order_0")) out.fail("order 0 degeneracy missed");
            if (!schur1(s).at(0).is_zero()) out.fail("first Schur transform head nonzero");
            if (schurk(s, 0).at(1) != CMatrix::identity(q))
                out.fail("order 0 chain member is not the identity");

            Parametrization par = parametrize(s);
            if (!(par.Q.size() == 2 && par.Q[0].is_zero() && par.Q[1] == CMatrix::identity(q)))
                out.fail("parametrization of the degenerate-head sequence is not (0, I)");
        }
    }

    auto [t, a] = e1518();
    if (!classify(t).verdicts.at("K_cd")) out.fail("2x2 fixture not completely degenerate");
    if (kernel_included(a, t.at(0))) out.fail("fixture kernel condition unexpectedly holds");

    MatSeq s = inverse1(t, a);
    bool members_match = s.kappa() == 3 && s.at(0) == a && s.at(1).is_zero() &&
                         s.at(2) == GaussRational(2) * a && s.at(3) == GaussRational(3) * a;
    if (!members_match) out.fail("inverse transform members differ from (A, 0, 2A, 3A)");
    if (schur_L_alpha(s, 1) != a) out.fail("first shifted complement of the extension is not A");
    if (classify(s).verdicts.at("K_cd")) out.fail("extension stayed completely degenerate");

    double elapsed = seconds_since(start);
    if (elapsed >= 1.0) out.fail("fixtures took " + std::to_string(elapsed) + "s");
    if (out.ok) out.note = "fixtures reproduce exactly in " + std::to_string(elapsed) + "s";
    return out;
}

// Criterion 2: both parametrization routes agree entrywise on at least
// 200 measure-generated extendable sequences, within a minute.
Outcome criterion_parametrize_equivalence()
{
    Outcome out;
    auto start = std::chrono::steady_clock::now();

    std::size_t checked = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        std::size_t q = 1 + i % 3;
        std::size_t len = i % 8;
        const Rational& alpha = alpha_grid()[i % 3];
        MatSeq s = random_in_class("K_nnd_ext", q, len, alpha, 20000 + i);

        Parametrization direct = parametrize(s);
        Parametrization schur = parametrize_via_schur(s);
        if (direct.Q.size() != schur.Q.size()) {
            out.fail("route lengths differ at trial " + std::to_string(i));
            continue;
        }
        for (std::size_t j = 0; j < direct.Q.size(); ++j)
            if (direct.Q[j] != schur.Q[j])
                out.fail("routes differ at trial " + std::to_string(i) +
                         ", entry " + std::to_string(j));
        ++checked;
    }

    double elapsed = seconds_since(start);
    if (checked < 200) out.fail("only " + std::to_string(checked) + " trials ran");
    if (elapsed >= 60.0) out.fail("equivalence took " + std::to_string(elapsed) + "s");
    if (out.ok)
        out.note = std::to_string(checked) + " extendable sequences in " +
                   std::to_string(elapsed) + "s";
    return out;
}

// Criterion 3: on non-extendable sequences the terminal parameter picks
// up exactly the accumulated defect.
Outcome criterion_boundary_defect()
{
    Outcome out;

    std::size_t checked = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        std::size_t q = 1 + i % 3;
        std::size_t len = 1 + i % 7;
        const Rational& alpha = alpha_grid()[i % 3];
        MatSeq s = random_in_class("K_nnd", q, len, alpha, 30000 + i);

        ClassReport r = classify(s);
        if (!r.verdicts.at("K_nnd") || r.verdicts.at("K_nnd_ext")) {
            out.fail("generator missed the stuck class at trial " + std::to_string(i));
            continue;
        }

        std::size_t kappa = static_cast<std::size_t>(s.kappa());
        Parametrization par = parametrize(s);
        for (std::size_t j = 0; j < kappa; ++j)
            if (par.Q[j] != schurk(s, j).at(0))
                out.fail("inner parameter " + std::to_string(j) +
                         " differs at trial " + std::to_string(i));

        DefectPair d = defect_matrices(s, kappa, kappa);
        if (!d.Z) {
            out.fail("missing accumulated defect at trial " + std::to_string(i));
            continue;
        }
        if (par.Q[kappa] != schurk(s, kappa).at(0) + *d.Z)
            out.fail("boundary parameter misses the defect at trial " + std::to_string(i));
        ++checked;
    }

    if (checked < 100) out.fail("only " + std::to_string(checked) + " trials ran");
    if (out.ok) out.note = std::to_string(checked) + " non-extendable sequences";
    return out;
}

// Criterion 4: the three round-trips are exact identities.
Outcome criterion_round_trips()
{
    Outcome out;

    std::size_t dominant = 0;
    for (const MatSeq& s : corpus()) {
        if (reconstruct(parametrize(s)) != s) {
            out.fail("reconstruct after parametrize changed a sequence");
            break;
        }

        if (!in_dominant_class(s)) continue;
        ++dominant;
        if (s.kappa() >= 1 && inverse1(schur1(s), s.at(0)) != s)
            out.fail("inverse transform after the Schur step changed a sequence");
        if (schur1(inverse1(s, s.at(0))) != s)
            out.fail("Schur step after the inverse transform changed a sequence");
    }

    if (dominant < 20) out.fail("only " + std::to_string(dominant) + " dominant sequences");
    if (out.ok)
        out.note = std::to_string(corpus().size()) + " sequences, " +
                   std::to_string(dominant) + " of them first-term dominant";
    return out;
}

// Criterion 5: class preservation under the Schur transform and its
// inverse, for every admissible step count and prescribed first member.
Outcome criterion_preservation()
{
    Outcome out;

    const std::vector<std::string> names = {"P1546", "P1410", "P1539", "P1555",
                                            "P1615", "P1459", "P0915"};
    std::map<std::string, std::size_t> passes;
    for (const MatSeq& s : corpus()) {
        for (const std::string& name : names) {
            IdentityCheck c = check_identity(name, s);
            if (c.status == "fail")
                out.fail(name + ": " + c.detail);
            if (c.status == "pass") ++passes[name];
        }
    }
    for (const std::string& name : names)
        if (passes[name] == 0) out.fail(name + " never applied");

    if (out.ok) {
        std::size_t total = 0;
        for (const auto& [name, count] : passes) total += count;
        out.note = std::to_string(total) + " preservation checks over " +
                   std::to_string(corpus().size()) + " sequences";
    }
    return out;
}

// Criterion 6: the whole identity catalog holds on randomized suites.
Outcome criterion_suite()
{
    Outcome out;

    SuiteConfig cfg;
    cfg.seed = 20250819;
    cfg.trials = 200;
    cfg.catalog = identity_catalog();

    SuiteSummary sum = run_suite(cfg);
    if (!sum.failures.empty()) {
        const SuiteFailure& f = sum.failures.front();
        out.fail(std::to_string(sum.failures.size()) + " failures, first " +
                 f.identity + " at trial " + std::to_string(f.trial) + ": " + f.detail);
    }

    std::size_t passes = 0;
    for (const auto& [name, count] : sum.pass) passes += count;
    if (passes == 0) out.fail("no identity ever applied");
    if (out.ok)
        out.note = std::to_string(passes) + " passes over " +
                   std::to_string(sum.trials) + " trials, zero failures";
    return out;
}

// Criterion 7: rank and determinant factorizations close on the corpus.
Outcome criterion_rank_det()
{
    Outcome out;

    std::size_t rows = 0;
    for (const MatSeq& s : corpus()) {
        RankDetReport rep = rank_det_report(s);
        rows += rep.rows.size();
        if (!rep.all_match) {
            for (const RankDetRow& row : rep.rows)
                if (!row.rank_match || !row.det_match) {
                    out.fail("factorization open at " + row.block);
                    break;
                }
        }
    }

    if (out.ok) out.note = std::to_string(rows) + " block factorizations";
    return out;
}

// Criterion 8: the direct classifier and the parametrization route
// agree, also near the boundary of the cone.
Outcome criterion_classifier_agreement()
{
    Outcome out;

    std::vector<MatSeq> pool = corpus();

    std::mt19937_64 eng(40000);
    std::size_t adversarial = 0;
    while (adversarial < 25) {
        std::size_t q = 1 + eng() % 3;
        std::size_t len = 1 + eng() % 4;
        std::vector<Atom> atoms;
        std::size_t count = 1 + eng() % 3;
        for (std::size_t k = 0; k < count; ++k) {
            CMatrix v = random_matrix(eng, q, 1);
            Rational point(stieltjes::testing::pick(eng, 0, 3), 2);
            point.canonicalize();
            atoms.push_back(Atom{Rational(-1) + point, v * v.conj_transpose()});
        }
        pool.push_back(moments(DiscreteMeasure{Rational(-1), atoms}, len));
        ++adversarial;
    }
    for (std::size_t i = 0; i < 25; ++i) {
        MatSeq base = random_in_class("K_nnd_ext", 1 + i % 2, 1 + i % 4,
                                      Rational(0), 41000 + i);
        MatSeq zeros(1 + i % 2, 1 + i % 2, GaussRational(0),
                     std::vector<CMatrix>(static_cast<std::size_t>(base.kappa()) + 1,
                                          CMatrix::zero(1 + i % 2, 1 + i % 2)));
        pool.push_back(direct_sum(base, zeros));
        ++adversarial;
    }

    for (const MatSeq& s : pool) {
        ClassReport direct = classify(s);
        ClassReport via = classify_via_parametrization(s);
        for (const auto& [name, verdict] : via.verdicts) {
            if (direct.verdicts.count(name) != 1) {
                out.fail("verdict " + name + " missing from the direct classifier");
                continue;
            }
            if (direct.verdicts.at(name) != verdict)
                out.fail("classifiers disagree on " + name);
        }
    }

    if (out.ok)
        out.note = std::to_string(pool.size()) + " sequences, " +
                   std::to_string(adversarial) + " of them near-degenerate";
    return out;
}

// Criterion 9: the exact kernel primitives against brute-force oracles.
Outcome criterion_linalg_oracles()
{
    Outcome out;

    std::size_t definiteness_checks = 0;
    auto compare = [&](const CMatrix& m) {
        if (psd_check(m) != minor_oracle(m)) out.fail("definiteness mismatch");
        ++definiteness_checks;
    };

    for (long d = -2; d <= 2; ++d) {
        CMatrix m(1, 1);
        m.at(0, 0) = GaussRational(d);
        compare(m);
    }
    for (long d0 = -2; d0 <= 2; ++d0)
        for (long d1 = -2; d1 <= 2; ++d1)
            for (long a = -2; a <= 2; ++a)
                compare(stieltjes::testing::mat2(d0, a, a, d1));
    for (long d0 = -2; d0 <= 2; ++d0)
        for (long d1 = -2; d1 <= 2; ++d1)
            for (long d2 = -2; d2 <= 2; ++d2)
                for (long a = -2; a <= 2; ++a)
                    for (long b = -2; b <= 2; ++b)
                        for (long c = -2; c <= 2; ++c) {
                            CMatrix m(3, 3);
                            m.at(0, 0) = GaussRational(d0);
                            m.at(1, 1) = GaussRational(d1);
                            m.at(2, 2) = GaussRational(d2);
                            m.at(0, 1) = GaussRational(a);
                            m.at(1, 0) = GaussRational(a);
                            m.at(0, 2) = GaussRational(b);
                            m.at(2, 0) = GaussRational(b);
                            m.at(1, 2) = GaussRational(c);
                            m.at(2, 1) = GaussRational(c);
                            compare(m);
                        }

    std::mt19937_64 eng(50000);
    std::size_t penrose_checks = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t rows = 1 + eng() % 4;
        std::size_t cols = 1 + eng() % 5;
        CMatrix a = random_matrix(eng, rows, cols);
        CMatrix g = pinv(a);
        bool good = a * g * a == a && g * a * g == g &&
                    (a * g).conj_transpose() == a * g &&
                    (g * a).conj_transpose() == g * a;
        if (!good) out.fail("a Penrose equation broke");
        ++penrose_checks;
    }

    if (out.ok)
        out.note = std::to_string(definiteness_checks) + " definiteness grids, " +
                   std::to_string(penrose_checks) + " pseudoinverses";
    return out;
}

} // namespace

int main()
{
    struct Entry {
        const char* label;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"worked fixtures", criterion_fixtures},
        {"parametrization route equivalence", criterion_parametrize_equivalence},
        {"boundary defect", criterion_boundary_defect},
        {"round-trips", criterion_round_trips},
        {"class preservation", criterion_preservation},
        {"identity suite", criterion_suite},
        {"rank and determinant factorizations", criterion_rank_det},
        {"classifier agreement", criterion_classifier_agreement},
        {"exact linear algebra oracles", criterion_linalg_oracles},
    };

    bool all_ok = true;
    int id = 0;
    for (const Entry& e : entries) {
        ++id;
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out.fail(std::string("unexpected error: ") + ex.what());
        }
        all_ok = all_ok && out.ok;
        std::printf("criterion %d (%s): %s%s%s\n", id, e.label,
                    out.ok ? "pass" : "FAIL",
                    out.note.empty() ? "" : " - ", out.note.c_str());
        std::fflush(stdout);
    }

    std::printf("acceptance: %s\n", all_ok ? "all criteria pass" : "FAILURES PRESENT");
    return all_ok ? 0 : 1;
}
