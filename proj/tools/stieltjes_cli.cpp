#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stieltjes/classify.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/gen.hpp"
#include "stieltjes/io.hpp"
#include "stieltjes/parametrize.hpp"
#include "stieltjes/transforms.hpp"
#include "stieltjes/verify.hpp"

namespace {

using nlohmann::json;
using namespace stieltjes;

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw error("io-error", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MatSeq load_sequence(const std::string& path, const std::optional<std::string>& alpha)
{
    MatSeq s = seq_from_json(parse_json(slurp(path)));
    if (alpha) return s.with_alpha(GaussRational(parse_rational(*alpha)));
    return s;
}

void emit(const json& doc, bool pretty)
{
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

MatSeq apply_transform(const MatSeq& s, const std::string& kind,
                       const std::optional<std::size_t>& k)
{
    if (k && kind != "schurk")
        throw error("invalid-config", "--k only applies to --kind schurk");
    if (kind == "reciprocal") return reciprocal(s);
    if (kind == "alpha_shift") return alpha_shift(s);
    if (kind == "splus") return splus(s);
    if (kind == "reza") return reza(s);
    if (kind == "short") return shortened(s);
    if (kind == "schur1") return schur1(s);
    if (kind == "schurk") {
        if (!k) throw error("invalid-config", "--kind schurk needs --k");
        return schurk(s, *k);
    }
    throw error("invalid-config", "unknown transform kind " + kind);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Schur analysis of alpha-Stieltjes matrix sequences"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent output documents");

    std::optional<std::string> alpha_text;
    std::string file;

    CLI::App* cmd_classify = app.add_subcommand("classify", "class membership report")->fallthrough();
    cmd_classify->add_option("--alpha", alpha_text, "override the file's alpha");
    cmd_classify->add_option("file", file, "sequence document")->required();

    std::string kind;
    std::optional<std::size_t> steps;
    CLI::App* cmd_transform = app.add_subcommand("transform", "apply a sequence transform")->fallthrough();
    cmd_transform
        ->add_option("--kind", kind, "reciprocal|alpha_shift|splus|reza|short|schur1|schurk")
        ->required();
    cmd_transform->add_option("--k", steps, "step count for schurk");
    cmd_transform->add_option("--alpha", alpha_text, "override the file's alpha");
    cmd_transform->add_option("file", file, "sequence document")->required();

    CLI::App* cmd_parametrize = app.add_subcommand("parametrize", "Stieltjes parametrization")->fallthrough();
    cmd_parametrize->add_option("file", file, "sequence document")->required();

    CLI::App* cmd_reconstruct =
        app.add_subcommand("reconstruct", "sequence from a parametrization")->fallthrough();
    cmd_reconstruct->add_option("file", file, "parametrization document")->required();

    std::string a_file;
    CLI::App* cmd_invert = app.add_subcommand("invert", "prepend a member via inverse1")->fallthrough();
    cmd_invert->add_option("--A", a_file, "matrix document for the new member")->required();
    cmd_invert->add_option("--alpha", alpha_text, "override the file's alpha");
    cmd_invert->add_option("file", file, "sequence document")->required();

    std::string suite_file;
    std::string identity;
    CLI::App* cmd_verify = app.add_subcommand("verify", "check catalog identities")->fallthrough();
    CLI::Option* opt_suite =
        cmd_verify->add_option("--suite", suite_file, "suite config document");
    CLI::Option* opt_identity =
        cmd_verify->add_option("--identity", identity, "one catalog identity");
    cmd_verify->add_option("file", file, "sequence document for --identity");
    opt_suite->excludes(opt_identity);

    std::string cls;
    std::size_t gen_q = 0;
    std::size_t gen_len = 0;
    std::string gen_alpha;
    std::uint64_t gen_seed = 0;
    CLI::App* cmd_gen = app.add_subcommand("gen", "random sequence in a class")->fallthrough();
    cmd_gen->add_option("--class", cls, "K_nnd_ext|K_pd|K_nnd|K_cd")->required();
    cmd_gen->add_option("--q", gen_q, "matrix size")->required();
    cmd_gen->add_option("--len", gen_len, "top index")->required();
    cmd_gen->add_option("--alpha", gen_alpha, "interval endpoint")->required();
    cmd_gen->add_option("--seed", gen_seed, "rng seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_classify)) {
            emit(class_report_to_json(classify(load_sequence(file, alpha_text))), pretty);
        } else if (app.got_subcommand(cmd_transform)) {
            emit(seq_to_json(apply_transform(load_sequence(file, alpha_text), kind, steps)),
                 pretty);
        } else if (app.got_subcommand(cmd_parametrize)) {
            emit(parametrization_to_json(parametrize(load_sequence(file, std::nullopt))),
                 pretty);
        } else if (app.got_subcommand(cmd_reconstruct)) {
            emit(seq_to_json(reconstruct(parametrization_from_json(parse_json(slurp(file))))),
                 pretty);
        } else if (app.got_subcommand(cmd_invert)) {
            CMatrix a = matrix_from_json(parse_json(slurp(a_file)));
            emit(seq_to_json(inverse1(load_sequence(file, alpha_text), a)), pretty);
        } else if (app.got_subcommand(cmd_verify)) {
            if (!suite_file.empty()) {
                SuiteSummary summary = run_suite(suite_config_from_json(
                    parse_json(slurp(suite_file))));
                emit(suite_summary_to_json(summary), pretty);
                if (!summary.failures.empty()) return 3;
            } else if (!identity.empty()) {
                if (file.empty())
                    throw error("invalid-config", "verify --identity needs a sequence file");
                IdentityCheck check =
                    check_identity(identity, load_sequence(file, std::nullopt));
                emit(identity_check_to_json(check), pretty);
                if (check.status == "fail") return 3;
            } else {
                throw error("invalid-config", "verify needs --suite or --identity");
            }
        } else if (app.got_subcommand(cmd_gen)) {
            emit(seq_to_json(random_in_class(cls, gen_q, gen_len,
                                             parse_rational(gen_alpha), gen_seed)),
                 pretty);
        }
    } catch (const error& e) {
        std::cerr << json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}
