#include "stieltjes/io.hpp"

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j)
{
    if (!j.is_string())
        throw error("parse-error", "expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

std::size_t size_from_json(const json& j, const std::string& field)
{
    if (!j.is_number_unsigned())
        throw error("parse-error", field + " must be a non-negative integer");
    return j.get<std::size_t>();
}

} // namespace

json parse_json(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw error("parse-error", "malformed JSON document");
    return j;
}

json gauss_to_json(const GaussRational& x)
{
    if (x.is_real()) return rational_to_string(x.re);
    return json{{"re", rational_to_string(x.re)}, {"im", rational_to_string(x.im)}};
}

GaussRational gauss_from_json(const json& j)
{
    if (j.is_string()) return GaussRational(parse_rational(j.get<std::string>()));
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im"))
            throw error("parse-error", "complex value needs re and im: " + j.dump());
        return GaussRational(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
    }
    throw error("parse-error", "expected a rational string or {re, im} object, got " + j.dump());
}

json matrix_to_json(const CMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const GaussRational& x = m.at(i, k);
            row.push_back(json{{"re", rational_to_string(x.re)},
                               {"im", rational_to_string(x.im)}});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json& j)
{
    if (!j.is_array())
        throw error("parse-error", "a matrix is a nested array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array())
            throw error("parse-error", "matrix row " + std::to_string(i) + " is not an array");
        if (i == 0) cols = j.at(i).size();
        if (j.at(i).size() != cols)
            throw error("parse-error", "matrix rows have unequal lengths");
    }
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = gauss_from_json(j.at(i).at(k));
    return m;
}

json seq_to_json(const MatSeq& s)
{
    json mats = json::array();
    for (std::size_t j = 0; j < s.size(); ++j) mats.push_back(matrix_to_json(s.at(j)));
    return json{{"p", s.p()},
                {"q", s.q()},
                {"alpha", gauss_to_json(s.alpha())},
                {"matrices", std::move(mats)}};
}

MatSeq seq_from_json(const json& j)
{
    if (!j.is_object())
        throw error("parse-error", "a sequence document is an object");
    for (const char* field : {"p", "q", "alpha", "matrices"})
        if (!j.contains(field))
            throw error("parse-error", std::string("sequence document lacks ") + field);
    std::size_t p = size_from_json(j.at("p"), "p");
    std::size_t q = size_from_json(j.at("q"), "q");
    if (p == 0 || q == 0)
        throw error("parse-error", "matrix shape must be positive");
    GaussRational alpha = gauss_from_json(j.at("alpha"));
    if (!j.at("matrices").is_array())
        throw error("parse-error", "matrices must be an array");
    std::vector<CMatrix> mats;
    for (const json& m : j.at("matrices")) mats.push_back(matrix_from_json(m));
    return MatSeq(p, q, std::move(alpha), std::move(mats));
}

json parametrization_to_json(const Parametrization& par)
{
    json values = json::array();
    for (const CMatrix& m : par.Q) values.push_back(matrix_to_json(m));
    return json{{"alpha", gauss_to_json(par.alpha)},
                {"p", par.p},
                {"q", par.q},
                {"Q", std::move(values)},
                {"provenance", par.provenance}};
}

Parametrization parametrization_from_json(const json& j)
{
    if (!j.is_object())
        throw error("parse-error", "a parametrization document is an object");
    for (const char* field : {"p", "q", "alpha", "Q"})
        if (!j.contains(field))
            throw error("parse-error", std::string("parametrization document lacks ") + field);
    Parametrization par;
    par.alpha = gauss_from_json(j.at("alpha"));
    par.p = size_from_json(j.at("p"), "p");
    par.q = size_from_json(j.at("q"), "q");
    if (par.p == 0 || par.q == 0)
        throw error("parse-error", "matrix shape must be positive");
    if (!j.at("Q").is_array())
        throw error("parse-error", "Q must be an array of matrices");
    for (const json& m : j.at("Q")) par.Q.push_back(matrix_from_json(m));
    if (j.contains("provenance")) {
        if (!j.at("provenance").is_array())
            throw error("parse-error", "provenance must be an array of strings");
        for (const json& tag : j.at("provenance")) {
            if (!tag.is_string())
                throw error("parse-error", "provenance entries are strings");
            par.provenance.push_back(tag.get<std::string>());
        }
    }
    return par;
}

json measure_to_json(const DiscreteMeasure& mu)
{
    json atoms = json::array();
    for (const Atom& atom : mu.atoms)
        atoms.push_back(json{{"point", rational_to_string(atom.point)},
                             {"weight", matrix_to_json(atom.weight)}});
    return json{{"alpha", rational_to_string(mu.alpha)}, {"atoms", std::move(atoms)}};
}

DiscreteMeasure measure_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("alpha") || !j.contains("atoms"))
        throw error("parse-error", "a measure document has alpha and atoms");
    DiscreteMeasure mu;
    mu.alpha = rational_from_json(j.at("alpha"));
    if (!j.at("atoms").is_array())
        throw error("parse-error", "atoms must be an array");
    for (const json& a : j.at("atoms")) {
        if (!a.is_object() || !a.contains("point") || !a.contains("weight"))
            throw error("parse-error", "an atom has point and weight");
        mu.atoms.push_back({rational_from_json(a.at("point")),
                            matrix_from_json(a.at("weight"))});
    }
    return mu;
}

json class_report_to_json(const ClassReport& rep)
{
    return json{{"verdicts", rep.verdicts}, {"witnesses", rep.witnesses}};
}

json identity_check_to_json(const IdentityCheck& check)
{
    return json{{"name", check.name},
                {"status", check.status},
                {"detail", check.detail},
                {"discrepancies", check.discrepancies}};
}

SuiteConfig suite_config_from_json(const json& j)
{
    if (!j.is_object())
        throw error("parse-error", "a suite config is an object");
    SuiteConfig cfg;
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            throw error("parse-error", "seed must be a non-negative integer");
        cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("trials")) cfg.trials = size_from_json(j.at("trials"), "trials");
    if (j.contains("catalog")) {
        if (!j.at("catalog").is_array())
            throw error("parse-error", "catalog must be an array of identity names");
        for (const json& name : j.at("catalog")) {
            if (!name.is_string())
                throw error("parse-error", "catalog entries are strings");
            cfg.catalog.push_back(name.get<std::string>());
        }
    } else {
        cfg.catalog = identity_catalog();
    }
    for (const char* field : {"q_values", "lengths", "alphas", "classes"})
        if (j.contains(field) && !j.at(field).is_array())
            throw error("parse-error", std::string(field) + " must be an array");
    if (j.contains("q_values"))
        for (const json& q : j.at("q_values"))
            cfg.q_values.push_back(size_from_json(q, "q_values entry"));
    if (j.contains("lengths"))
        for (const json& len : j.at("lengths"))
            cfg.lengths.push_back(size_from_json(len, "lengths entry"));
    if (j.contains("alphas"))
        for (const json& a : j.at("alphas")) cfg.alphas.push_back(rational_from_json(a));
    if (j.contains("classes"))
        for (const json& cls : j.at("classes")) {
            if (!cls.is_string())
                throw error("parse-error", "classes entries are strings");
            cfg.classes.push_back(cls.get<std::string>());
        }
    return cfg;
}

json suite_summary_to_json(const SuiteSummary& summary)
{
    json failures = json::array();
    for (const SuiteFailure& f : summary.failures)
        failures.push_back(json{{"identity", f.identity},
                                {"detail", f.detail},
                                {"trial", f.trial},
                                {"sequence", seq_to_json(f.sequence)}});
    return json{{"trials", summary.trials},
                {"pass", summary.pass},
                {"fail", summary.fail},
                {"inapplicable", summary.inapplicable},
                {"failures", std::move(failures)}};
}

} // namespace stieltjes
