#include <doctest.h>

#include <cstdint>
#include <random>

#include "helpers.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/gen.hpp"
#include "stieltjes/linalg.hpp"
#include "stieltjes/transforms.hpp"

using namespace stieltjes;
using stieltjes::testing::e1518;
using stieltjes::testing::mat2;
using stieltjes::testing::scalar;
using stieltjes::testing::scalar_seq;
using stieltjes::testing::seq125;
using stieltjes::testing::seq_stuck;

namespace {

MatSeq random_member(const char* cls, std::size_t q, std::size_t len,
                     long alpha, std::uint64_t seed)
{
    return random_in_class(cls, q, len, Rational(alpha), seed);
}

} // namespace

TEST_SUITE_BEGIN("transforms");

TEST_CASE("reciprocal inverts convolution when s_0 is invertible")
{
    MatSeq s = seq125();
    MatSeq r = reciprocal(s);

    CHECK(r.at(0) == scalar(1));
    CHECK(r.at(1) == scalar(-2));
    CHECK(r.at(2) == scalar(-1));

    // sum_{l<=j} s_{j-l} r_l is I at j = 0 and vanishes afterwards.
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        MatSeq t = random_member("K_pd", 2, 5, 0, seed);
        MatSeq rt = reciprocal(t);
        for (long j = 0; j <= t.kappa(); ++j) {
            CMatrix acc = CMatrix::zero(2, 2);
            for (long l = 0; l <= j; ++l)
                acc = acc + t.at(static_cast<std::size_t>(j - l)) * rt.at(static_cast<std::size_t>(l));
            CHECK(acc == (j == 0 ? CMatrix::identity(2) : CMatrix::zero(2, 2)));
        }
    }
}

TEST_CASE("reciprocal handles singular and rectangular leading members")
{
    MatSeq s = seq_stuck();
    MatSeq r = reciprocal(s);
    CHECK(r.at(0) == scalar(0));
    CHECK(r.at(1) == scalar(0));

    MatSeq wide(1, 2, GaussRational(0),
                {CMatrix::from_rows({{GaussRational(1), GaussRational(0)}}),
                 CMatrix::from_rows({{GaussRational(3), GaussRational(4)}})});
    MatSeq rw = reciprocal(wide);
    CHECK(rw.p() == 2);
    CHECK(rw.q() == 1);
    CHECK(rw.at(0) == pinv(wide.at(0)));
}

TEST_CASE("alpha_shift and splus match their member formulas")
{
    MatSeq s = scalar_seq(-1, {1, 2, 5});

    MatSeq g = alpha_shift(s);
    CHECK(g.kappa() == 1);
    CHECK(g.at(0) == scalar(3));
    CHECK(g.at(1) == scalar(7));

    MatSeq t = splus(s);
    CHECK(t.kappa() == 2);
    CHECK(t.at(0) == scalar(1));
    CHECK(t.at(1) == scalar(3));
    CHECK(t.at(2) == scalar(7));

    CHECK_THROWS_AS(alpha_shift(scalar_seq(0, {1})), error);
}

TEST_CASE("reza composes reciprocal with splus and telescopes back")
{
    std::mt19937_64 eng(31);
    for (int trial = 0; trial < 8; ++trial) {
        MatSeq s = random_member("K_nnd_ext", 1 + trial % 3, 4, trial % 2 ? -1 : 0,
                                 1000 + static_cast<std::uint64_t>(trial));
        MatSeq rz = reza(s);
        MatSeq rec = reciprocal(s);
        GaussRational alpha = s.alpha();

        // reza is the alpha-weighted running sum of the reciprocal.
        for (long j = 0; j <= s.kappa(); ++j) {
            CMatrix acc = CMatrix::zero(s.q(), s.p());
            for (long l = 0; l <= j; ++l)
                acc = acc + pow(alpha, static_cast<unsigned long>(j - l)) * rec.at(static_cast<std::size_t>(l));
            CHECK(rz.at(static_cast<std::size_t>(j)) == acc);
        }

        CHECK(splus(rz) == rec);
    }
}

TEST_CASE("shortened matches the reciprocal sum formula")
{
    // s_j^short = -sum_{l<=j+1} alpha^{j+1-l} (reciprocal s)_l, for any
    // sequence with kappa >= 1, dominant or not.
    for (std::uint64_t seed : {41u, 42u}) {
        for (long alpha : {-1, 0, 2}) {
            MatSeq s = random_member("K_nnd", 2, 4, alpha, seed);
            MatSeq sh = shortened(s);
            MatSeq rec = reciprocal(s);
            REQUIRE(sh.kappa() == s.kappa() - 1);
            for (long j = 0; j <= sh.kappa(); ++j) {
                CMatrix acc = CMatrix::zero(s.q(), s.p());
                for (long l = 0; l <= j + 1; ++l)
                    acc = acc + pow(GaussRational(alpha), static_cast<unsigned long>(j + 1 - l)) * rec.at(static_cast<std::size_t>(l));
                CHECK(sh.at(static_cast<std::size_t>(j)) == -acc);
            }
        }
    }
}

TEST_CASE("the scalar chain 1, 2, 5 collapses to hand values")
{
    MatSeq s = seq125();

    MatSeq t1 = schur1(s);
    CHECK(t1.kappa() == 1);
    CHECK(t1.at(0) == scalar(2));
    CHECK(t1.at(1) == scalar(1));

    MatSeq t2 = schurk(s, 2);
    CHECK(t2.kappa() == 0);
    CHECK(t2.at(0) == scalar(1));

    CHECK(schurk(s, 0) == s);
    CHECK_THROWS_AS(schurk(s, 3), error);
}

TEST_CASE("schur1 of the stuck sequence is the zero member")
{
    MatSeq t = schur1(seq_stuck());
    CHECK(t.kappa() == 0);
    CHECK(t.at(0) == scalar(0));
}

TEST_CASE("inverse1 reproduces the worked 2x2 prepension")
{
    auto [t, a] = e1518();
    MatSeq s = inverse1(t, a);

    REQUIRE(s.kappa() == 3);
    CHECK(s.at(0) == a);
    CHECK(s.at(1) == CMatrix::zero(2, 2));
    CHECK(s.at(2) == GaussRational(2) * a);
    CHECK(s.at(3) == GaussRational(3) * a);
}

TEST_CASE("inverse1 then schur1 is the identity for dominant first members")
{
    for (std::uint64_t seed : {51u, 52u, 53u, 54u}) {
        MatSeq t = random_member("K_nnd_ext", 2, 3, -1, seed);

        // Moment sequences of measures are first-term dominant.
        CMatrix t0 = t.at(0);
        CMatrix proj_l = t0 * pinv(t0);
        CMatrix proj_r = pinv(t0) * t0;
        for (long j = 0; j <= t.kappa(); ++j)
            REQUIRE(proj_l * t.at(static_cast<std::size_t>(j)) * proj_r == t.at(static_cast<std::size_t>(j)));

        CHECK(schur1(inverse1(t, t0)) == t);
    }
}

TEST_CASE("schur1 then inverse1 recovers first-term dominant sequences")
{
    for (std::uint64_t seed : {61u, 62u, 63u}) {
        MatSeq s = random_member("K_nnd_ext", 2, 4, 0, seed);
        MatSeq t = schur1(s);
        MatSeq back = inverse1(t, s.at(0));
        CHECK(back == s);
    }
}

TEST_CASE("transforms preserve alpha and reject empty tails where defined")
{
    MatSeq s = seq125();
    CHECK(reciprocal(s).alpha() == s.alpha());
    CHECK(schur1(s).alpha() == s.alpha());
    CHECK_THROWS_AS(schur1(scalar_seq(0, {1})), error);
    CHECK_THROWS_AS(shortened(scalar_seq(0, {1})), error);
}

TEST_SUITE_END();
