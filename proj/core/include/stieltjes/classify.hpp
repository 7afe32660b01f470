#ifndef STIELTJES_CLASSIFY_HPP
#define STIELTJES_CLASSIFY_HPP

#include <map>
#include <string>

#include "stieltjes/seq.hpp"

namespace stieltjes {

// Membership verdicts for one sequence.  Keys are the class names
// H_nnd, H_pd, K_nnd, K_pd, K_nnd_ext, K_cd, K_cd_order_m (one key per
// m <= kappa), D and D_tilde.  Every false verdict carries a witness
// naming the violated condition at the smallest failing index.
struct ClassReport {
    std::map<std::string, bool> verdicts;
    std::map<std::string, std::string> witnesses;
};

// Decides every class in one pass.  Requires a real alpha and at least
// one member.  Non-square sequences fail all Hankel classes with
// witness "p != q"; D and D_tilde are still decided.
ClassReport classify(const MatSeq& s);

// Whether s extends by one member inside K_nnd.  For kappa = 2n+1 this
// holds iff Ker L_n is contained in Ker L_alpha_n, for kappa = 2n with
// n >= 1 iff Ker L_alpha_{n-1} is contained in Ker L_n, and for
// kappa = 0 iff s_0 is psd.  Sequences outside K_nnd return false.
bool extendability_test(const MatSeq& s);

// Single-class convenience over classify.  K_cd_order_m is addressed
// as "K_cd_order_<m>"; m beyond kappa is index-out-of-range, any other
// unlisted name is unknown-class.
bool is_member(const MatSeq& s, const std::string& cls);

} // namespace stieltjes

#endif
