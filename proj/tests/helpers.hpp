#ifndef STIELTJES_TEST_HELPERS_HPP
#define STIELTJES_TEST_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "stieltjes/seq.hpp"

namespace stieltjes::testing {

inline CMatrix scalar(long value)
{
    CMatrix m(1, 1);
    m.at(0, 0) = GaussRational(value);
    return m;
}

inline MatSeq scalar_seq(long alpha, std::initializer_list<long> values)
{
    std::vector<CMatrix> mats;
    for (long v : values) mats.push_back(scalar(v));
    return MatSeq(1, 1, GaussRational(alpha), std::move(mats));
}

inline CMatrix mat2(long a, long b, long c, long d)
{
    CMatrix m(2, 2);
    m.at(0, 0) = GaussRational(a);
    m.at(0, 1) = GaussRational(b);
    m.at(1, 0) = GaussRational(c);
    m.at(1, 1) = GaussRational(d);
    return m;
}

// The running example of a strictly positive definite sequence.
inline MatSeq seq125()
{
    return scalar_seq(0, {1, 2, 5});
}

// Degenerate leading member with a full second member; in K_nnd but not
// extendable, the smallest such sequence.
inline MatSeq seq_stuck(long alpha = -1)
{
    return scalar_seq(alpha, {0, 1});
}

// t and A with Ker A not inside Ker t_0: prepending A via inverse1
// does not stay completely degenerate.
struct InversePair {
    MatSeq t;
    CMatrix a;
};

inline InversePair e1518()
{
    CMatrix t0 = mat2(1, 0, 0, 1);
    CMatrix t1 = mat2(1, 1, 1, 0);
    CMatrix t2 = mat2(2, 1, 1, 1);
    MatSeq t(2, 2, GaussRational(-1), {t0, t1, t2});
    return {t, mat2(1, 0, 0, 0)};
}

} // namespace stieltjes::testing

#endif
