#ifndef STIELTJES_VERIFY_HPP
#define STIELTJES_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stieltjes/seq.hpp"

namespace stieltjes {

// Names of every identity the checker knows, in catalog order.
const std::vector<std::string>& identity_catalog();

// Outcome of evaluating one identity on one sequence.  status is
// "pass", "fail" or "inapplicable".  A failing check carries the two
// sides and their difference as exact matrices in discrepancies; an
// inapplicable check names the precondition that ruled it out in
// detail.  Both sides of each identity are computed along independent
// routes, so a pass certifies the equality rather than restating it.
struct IdentityCheck {
    std::string name;
    std::string status;
    std::string detail;
    std::vector<std::string> discrepancies;
};

IdentityCheck check_identity(const std::string& name, const MatSeq& s);

// Randomized sweep: draws sequences with gen and runs a catalog subset
// on each.  Vectors left empty fall back to the defaults named in the
// comments, except catalog, where empty means check nothing.
struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<std::string> catalog;
    std::vector<std::size_t> q_values;     // {1, 2, 3}
    std::vector<std::size_t> lengths;      // {0, ..., 7}
    std::vector<Rational> alphas;          // {-1, 0, 1/2}
    std::vector<std::string> classes;      // {K_nnd_ext, K_pd, K_nnd, K_cd}
};

struct SuiteFailure {
    std::string identity;
    std::string detail;
    std::size_t trial = 0;
    MatSeq sequence = MatSeq::empty(0, 0, GaussRational());
};

struct SuiteSummary {
    std::size_t trials = 0;
    std::map<std::string, std::size_t> pass;
    std::map<std::string, std::size_t> fail;
    std::map<std::string, std::size_t> inapplicable;
    std::vector<SuiteFailure> failures;
};

SuiteSummary run_suite(const SuiteConfig& config);

} // namespace stieltjes

#endif
