#ifndef STIELTJES_GEN_HPP
#define STIELTJES_GEN_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stieltjes/seq.hpp"

namespace stieltjes {

struct Atom {
    Rational point;
    CMatrix weight;
};

// Discrete matrix measure on [alpha, infinity): finitely many atoms at
// rational points with psd weights of one shared square size.
struct DiscreteMeasure {
    Rational alpha;
    std::vector<Atom> atoms;
};

// Power moments s_j = sum over atoms of point^j * weight for j = 0..m,
// with the convention 0^0 = 1 so that s_0 adds up the total mass.
// Validates the measure first (invalid-measure): at least one atom, all
// weights square of equal size and psd, every point >= alpha.
MatSeq moments(const DiscreteMeasure& mu, std::size_t m);

// Deterministic random sequence with confirmed membership.  cls is one
// of K_nnd_ext, K_pd, K_nnd, K_cd, where K_nnd asks for a sequence that
// is in K_nnd but not extendable; len is the top index of the result,
// so the sequence has len + 1 members.  All randomness comes from a
// seeded mt19937_64 with fixed draw order, so equal arguments give the
// identical sequence on every platform.  The result is re-checked with
// classify before it is returned; a draw that misses its class is
// resampled, and 1000 misses raise resampling-budget-exhausted.  A
// request for a non-extendable sequence with len = 0 is invalid-config,
// since every psd s_0 extends.
MatSeq random_in_class(const std::string& cls, std::size_t q, std::size_t len,
                       const Rational& alpha, std::uint64_t seed);

} // namespace stieltjes

#endif
