#include <doctest.h>

#include "helpers.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/matrix.hpp"

using namespace stieltjes;
using stieltjes::testing::mat2;

namespace {

GaussRational gr(long re, long im = 0)
{
    return GaussRational(Rational(re), Rational(im));
}

} // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("construction helpers produce the expected entries")
{
    CMatrix id = CMatrix::identity(3);
    CHECK(id.rows() == 3);
    CHECK(id.at(0, 0) == gr(1));
    CHECK(id.at(0, 1) == gr(0));

    CMatrix z = CMatrix::zero(2, 4);
    CHECK(z.is_zero());
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 4);

    CMatrix m = CMatrix::from_rows({{gr(1), gr(2)}, {gr(3), gr(4)}});
    CHECK(m == mat2(1, 2, 3, 4));
}

TEST_CASE("from_rows rejects ragged input")
{
    CHECK_THROWS_AS(CMatrix::from_rows({{gr(1), gr(2)}, {gr(3)}}), error);
}

TEST_CASE("arithmetic matches hand values")
{
    CMatrix a = mat2(1, 2, 3, 4);
    CMatrix b = mat2(0, 1, 1, 0);

    CHECK(a + b == mat2(1, 3, 4, 4));
    CHECK(a - a == CMatrix::zero(2, 2));
    CHECK(a * b == mat2(2, 1, 4, 3));
    CHECK(b * a == mat2(3, 4, 1, 2));
    CHECK(gr(2) * a == mat2(2, 4, 6, 8));
    CHECK(-a == mat2(-1, -2, -3, -4));
}

TEST_CASE("multiplication checks shapes")
{
    CMatrix a(2, 3);
    CMatrix b(2, 3);
    CHECK_THROWS_AS(a * b, error);
    CHECK_THROWS_AS(a + CMatrix(3, 2), error);
}

TEST_CASE("conjugate transpose conjugates entries")
{
    CMatrix m(1, 2);
    m.at(0, 0) = gr(1, 2);
    m.at(0, 1) = gr(0, -1);

    CMatrix h = m.conj_transpose();
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 1);
    CHECK(h.at(0, 0) == gr(1, -2));
    CHECK(h.at(1, 0) == gr(0, 1));

    CHECK(m.transpose().at(0, 0) == gr(1, 2));
    CHECK((m * m.conj_transpose()).is_hermitian());
}

TEST_CASE("is_hermitian requires a square matrix with conjugate symmetry")
{
    CMatrix h = CMatrix::from_rows({{gr(2), gr(1, 1)}, {gr(1, -1), gr(3)}});
    CHECK(h.is_hermitian());

    CMatrix n = CMatrix::from_rows({{gr(2), gr(1, 1)}, {gr(1, 1), gr(3)}});
    CHECK_FALSE(n.is_hermitian());
    CHECK_FALSE(CMatrix(2, 3).is_hermitian());
}

TEST_CASE("block extraction and insertion are inverse on aligned blocks")
{
    CMatrix m = CMatrix::zero(4, 4);
    CMatrix corner = mat2(5, 6, 7, 8);
    m.set_block(2, 2, corner);

    CHECK(m.block(2, 2, 2, 2) == corner);
    CHECK(m.block(0, 0, 2, 2).is_zero());
    CHECK_THROWS_AS(m.block(3, 3, 2, 2), error);
}

TEST_CASE("kron with identity builds block diagonals")
{
    CMatrix b = mat2(1, 2, 3, 4);
    CMatrix k = kron(CMatrix::identity(2), b);

    CHECK(k.rows() == 4);
    CHECK(k.block(0, 0, 2, 2) == b);
    CHECK(k.block(2, 2, 2, 2) == b);
    CHECK(k.block(0, 2, 2, 2).is_zero());
}

TEST_CASE("kron matches the entrywise definition")
{
    CMatrix a = CMatrix::from_rows({{gr(1), gr(2)}});
    CMatrix b = CMatrix::from_rows({{gr(0, 1)}, {gr(3)}});
    CMatrix k = kron(a, b);

    CHECK(k.rows() == 2);
    CHECK(k.cols() == 2);
    CHECK(k.at(0, 0) == gr(0, 1));
    CHECK(k.at(0, 1) == gr(0, 2));
    CHECK(k.at(1, 0) == gr(3));
    CHECK(k.at(1, 1) == gr(6));
}

TEST_CASE("block_diag concatenates mixed shapes")
{
    CMatrix a = CMatrix::from_rows({{gr(1), gr(2)}});
    CMatrix b = mat2(3, 0, 0, 3);
    CMatrix d = block_diag({a, b});

    CHECK(d.rows() == 3);
    CHECK(d.cols() == 4);
    CHECK(d.block(0, 0, 1, 2) == a);
    CHECK(d.block(1, 2, 2, 2) == b);
    CHECK(d.at(0, 2) == gr(0));
    CHECK(d.at(2, 0) == gr(0));
}

TEST_SUITE_END();
