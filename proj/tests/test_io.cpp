#include <doctest.h>

#include "helpers.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/io.hpp"

using namespace stieltjes;
using nlohmann::json;
using stieltjes::testing::mat2;
using stieltjes::testing::seq125;

TEST_SUITE_BEGIN("io");

TEST_CASE("parse_json reports malformed documents as parse errors")
{
    CHECK(parse_json("{\"a\": 1}").at("a") == 1);
    CHECK_THROWS_AS(parse_json("{broken"), error);
    CHECK_THROWS_AS(parse_json(""), error);
}

TEST_CASE("gauss values round-trip in both spellings")
{
    GaussRational real(Rational(-7, 3));
    json jr = gauss_to_json(real);
    CHECK(jr.is_string());
    CHECK(jr.get<std::string>() == "-7/3");
    CHECK(gauss_from_json(jr) == real);

    GaussRational z(Rational(1, 2), Rational(-4));
    json jz = gauss_to_json(z);
    CHECK(jz.is_object());
    CHECK(gauss_from_json(jz) == z);

    CHECK(gauss_from_json(json::parse("{\"re\":\"1/2\",\"im\":\"0\"}")) ==
          GaussRational(Rational(1, 2)));
    CHECK_THROWS_AS(gauss_from_json(json::parse("{\"re\":\"1/0\"}")), error);
    CHECK_THROWS_AS(gauss_from_json(json::parse("3.5")), error);
}

TEST_CASE("matrices round-trip with explicit re and im entries")
{
    CMatrix m = mat2(1, -2, 3, 4);
    m.at(0, 1) = GaussRational(Rational(-2), Rational(5, 3));

    json j = matrix_to_json(m);
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    CHECK(j[0][0].is_object());
    CHECK(matrix_from_json(j) == m);

    CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"1\"],[\"2\",\"3\"]]")), error);
    CHECK(matrix_from_json(json::parse("[]")).rows() == 0);
}

TEST_CASE("sequences round-trip with shape and alpha")
{
    MatSeq s = seq125();
    json j = seq_to_json(s);

    CHECK(j.at("p") == 1);
    CHECK(j.at("q") == 1);
    CHECK(j.at("alpha").is_string());
    CHECK(j.at("matrices").size() == 3);
    CHECK(seq_from_json(j) == s);

    json complex_alpha = j;
    complex_alpha["alpha"] = json{{"re", "0"}, {"im", "1"}};
    MatSeq c = seq_from_json(complex_alpha);
    CHECK(c.alpha() == GaussRational(Rational(0), Rational(1)));
}

TEST_CASE("seq_from_json validates the document shape")
{
    CHECK_THROWS_AS(seq_from_json(json::parse("{\"p\":1,\"q\":1}")), error);
    CHECK_THROWS_AS(
        seq_from_json(json::parse(
            "{\"p\":0,\"q\":1,\"alpha\":\"0\",\"matrices\":[]}")),
        error);
    CHECK_THROWS_AS(
        seq_from_json(json::parse(
            "{\"p\":1,\"q\":1,\"alpha\":\"0\",\"matrices\":[[[\"1\",\"2\"]]]}")),
        error);
}

TEST_CASE("parametrizations round-trip including provenance")
{
    Parametrization par = parametrize(seq125());
    json j = parametrization_to_json(par);
    CHECK(j.at("Q").size() == 3);
    CHECK(j.at("provenance")[2] == "L_1");

    Parametrization back = parametrization_from_json(j);
    CHECK(back.alpha == par.alpha);
    CHECK(back.p == par.p);
    CHECK(back.q == par.q);
    REQUIRE(back.Q.size() == par.Q.size());
    for (std::size_t i = 0; i < par.Q.size(); ++i)
        CHECK(back.Q[i] == par.Q[i]);

    j.erase("provenance");
    Parametrization bare = parametrization_from_json(j);
    CHECK(bare.Q.size() == 3);
    CHECK(bare.provenance.empty());
}

TEST_CASE("measures round-trip")
{
    DiscreteMeasure mu{Rational(-1),
                       {{Rational(1, 2), mat2(2, 1, 1, 1)},
                        {Rational(3), mat2(1, 0, 0, 0)}}};
    json j = measure_to_json(mu);
    CHECK(j.at("atoms").size() == 2);

    DiscreteMeasure back = measure_from_json(j);
    CHECK(back.alpha == mu.alpha);
    REQUIRE(back.atoms.size() == 2);
    CHECK(back.atoms[0].point == mu.atoms[0].point);
    CHECK(back.atoms[1].weight == mu.atoms[1].weight);
}

TEST_CASE("reports and checks serialize with their maps intact")
{
    ClassReport rep = classify(stieltjes::testing::seq_stuck());
    json j = class_report_to_json(rep);
    CHECK(j.at("verdicts").at("K_nnd") == true);
    CHECK(j.at("verdicts").at("K_nnd_ext") == false);
    CHECK(j.at("witnesses").contains("K_nnd_ext"));

    IdentityCheck chk = check_identity("L1445", seq125());
    json jc = identity_check_to_json(chk);
    CHECK(jc.at("name") == "L1445");
    CHECK(jc.at("status") == "pass");
}

TEST_CASE("suite configuration fills defaults only for absent keys")
{
    SuiteConfig full = suite_config_from_json(parse_json("{\"seed\":3,\"trials\":9}"));
    CHECK(full.seed == 3);
    CHECK(full.trials == 9);
    CHECK(full.catalog == identity_catalog());
    CHECK(full.q_values.empty());

    SuiteConfig narrow = suite_config_from_json(parse_json(
        "{\"seed\":1,\"trials\":2,\"catalog\":[],\"q_values\":[2],"
        "\"alphas\":[\"-1\",\"1/2\"],\"classes\":[\"K_pd\"]}"));
    CHECK(narrow.catalog.empty());
    CHECK(narrow.q_values == std::vector<std::size_t>{2});
    CHECK(narrow.alphas == std::vector<Rational>{Rational(-1), Rational(1, 2)});
    CHECK(narrow.classes == std::vector<std::string>{"K_pd"});

    CHECK_THROWS_AS(suite_config_from_json(parse_json("{\"seed\":-1,\"trials\":1}")), error);
    CHECK_THROWS_AS(suite_config_from_json(parse_json("{\"seed\":1,\"trials\":1,\"q_values\":3}")), error);
}

TEST_CASE("suite summaries serialize failures with their sequences")
{
    SuiteConfig cfg;
    cfg.seed = 5;
    cfg.trials = 2;
    cfg.catalog = {"L1445"};

    SuiteSummary sum = run_suite(cfg);
    json j = suite_summary_to_json(sum);
    CHECK(j.at("trials") == 2);
    CHECK(j.at("pass").at("L1445").is_number_unsigned());
    CHECK(j.at("failures").is_array());
    CHECK(j.at("failures").empty());
}

TEST_SUITE_END();
