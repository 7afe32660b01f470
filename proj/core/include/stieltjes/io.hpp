#ifndef STIELTJES_IO_HPP
#define STIELTJES_IO_HPP

#include <string>

#include <json.hpp>

#include "stieltjes/classify.hpp"
#include "stieltjes/gen.hpp"
#include "stieltjes/parametrize.hpp"
#include "stieltjes/seq.hpp"
#include "stieltjes/verify.hpp"

namespace stieltjes {

// One wire format everywhere: rationals as "a/b" strings, complex
// values as {"re": "a/b", "im": "c/d"} objects (real values may appear
// in either form on input), matrices as row-major nested arrays.
// Parsers throw parse-error on malformed documents.

nlohmann::json parse_json(const std::string& text);

nlohmann::json gauss_to_json(const GaussRational& x);
GaussRational gauss_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json seq_to_json(const MatSeq& s);
MatSeq seq_from_json(const nlohmann::json& j);

nlohmann::json parametrization_to_json(const Parametrization& par);
Parametrization parametrization_from_json(const nlohmann::json& j);

nlohmann::json measure_to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const nlohmann::json& j);

nlohmann::json class_report_to_json(const ClassReport& rep);
nlohmann::json identity_check_to_json(const IdentityCheck& check);

SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json suite_summary_to_json(const SuiteSummary& summary);

} // namespace stieltjes

#endif
