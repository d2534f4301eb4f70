#include "tauber/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tauber/acceptance.hpp"
#include "tauber/corpus.hpp"
#include "tauber/errors.hpp"
#include "tauber/problem.hpp"
#include "tauber/report.hpp"

namespace tauber {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

mpfr_prec_t env_default_precision() {
    const char* s = std::getenv("TAUBER_PRECISION");
    if (!s || !*s) return 256;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 2 || v > 1000000)
        throw ParseError("TAUBER_PRECISION must be an integer number of bits in [2, 1000000]");
    return static_cast<mpfr_prec_t>(v);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw ParseError("cannot open output file: " + output_path);
    out << text;
}

std::string payload_kind(const Model& m) {
    if (std::holds_alternative<SqrtHolomorphic>(m.payload))
        return is_general_alpha(m) ? "sqrt (alpha = " + to_string(m.alpha) + ")" : "sqrt";
    if (std::holds_alternative<SqrtPole>(m.payload)) return "pole";
    if (std::holds_alternative<RawLocalMap>(m.payload)) return "raw";
    return "interior";
}

struct Selection {
    std::string model_id;
    std::string problem_path;

    Problem load() const {
        if (!model_id.empty() && !problem_path.empty())
            throw ParseError("give either --model or --problem, not both");
        if (!model_id.empty()) {
            Problem p;
            p.model = corpus_model(model_id);
            return p;
        }
        if (!problem_path.empty()) return load_problem_file(problem_path);
        throw ParseError("no input: pass --model <id> or --problem <file.json>");
    }
};

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"asymptotic expansions of power-series coefficients, with verification"};
    app.require_subcommand(1);

    // Common knobs; each subcommand binds the ones it honors.
    Selection sel;
    int order = 3;
    long nmax = 2000;
    long precision_flag = 0;  // 0 = default (env or 256)
    std::string format = "text";
    std::string output_path;
    bool no_numeric = false;
    bool gate = false;

    auto add_format = [&](CLI::App* cmd, bool with_csv) {
        cmd->add_option("--format", format,
                        with_csv ? "output format: json, csv, or text" : "output format: json or text")
            ->check(with_csv ? CLI::IsMember({"json", "csv", "text"})
                             : CLI::IsMember({"json", "text"}));
    };
    auto add_selection = [&](CLI::App* cmd) {
        cmd->add_option("--model", sel.model_id, "built-in model id (see `corpus list`)");
        cmd->add_option("--problem", sel.problem_path, "problem description file (JSON)");
    };

    CLI::App* expand = app.add_subcommand("expand", "print the asymptotic expansion of a model");
    add_selection(expand);
    expand->add_option("--order", order, "number of asymptotic exponents to produce");
    expand->add_option("--precision", precision_flag, "working precision in bits");
    expand->add_option("--output", output_path, "write to a file instead of stdout");
    add_format(expand, true);

    CLI::App* verify = app.add_subcommand("verify", "expand a model and check it against oracles");
    add_selection(verify);
    verify->add_option("--order", order, "number of asymptotic exponents to produce");
    verify->add_option("--nmax", nmax, "largest raw coefficient index to cross-check");
    verify->add_option("--precision", precision_flag, "working precision in bits");
    verify->add_option("--output", output_path, "write to a file instead of stdout");
    verify->add_flag("--no-numeric", no_numeric, "skip the Cauchy-circle numeric cross-check");
    add_format(verify, true);

    CLI::App* corpus = app.add_subcommand("corpus", "built-in model corpus");
    corpus->require_subcommand(1);
    CLI::App* corpus_list = corpus->add_subcommand("list", "list corpus models");
    add_format(corpus_list, false);
    CLI::App* corpus_run = corpus->add_subcommand("run", "verify every corpus model");
    corpus_run->add_option("--order", order, "number of asymptotic exponents to produce");
    corpus_run->add_option("--nmax", nmax, "largest raw coefficient index to cross-check");
    corpus_run->add_option("--precision", precision_flag, "working precision in bits");
    corpus_run->add_flag("--gate", gate, "run the acceptance gate instead of the plain sweep");
    add_format(corpus_run, false);

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? kExitOk : kExitParse;
        }

        const mpfr_prec_t default_prec = env_default_precision();
        BigFloat::set_default_precision(default_prec);

        if (corpus_list->parsed()) {
            if (format == "json") {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const Model& m : builtin_corpus()) {
                    nlohmann::ordered_json e;
                    e["id"] = m.id;
                    e["kind"] = payload_kind(m);
                    e["description"] = m.description;
                    arr.push_back(std::move(e));
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const Model& m : builtin_corpus())
                    std::cout << m.id << "  [" << payload_kind(m) << "]  " << m.description
                              << "\n";
            }
            return kExitOk;
        }

        if (corpus_run->parsed()) {
            if (gate) {
                const std::vector<CriterionResult> results = run_acceptance();
                bool all = true;
                if (format == "json") {
                    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                    for (const auto& r : results) {
                        all = all && r.pass;
                        nlohmann::ordered_json e;
                        e["index"] = r.index;
                        e["name"] = r.name;
                        e["pass"] = r.pass;
                        e["seconds"] = r.seconds;
                        e["detail"] = r.detail;
                        arr.push_back(std::move(e));
                    }
                    std::cout << arr.dump(2) << "\n";
                } else {
                    for (const auto& r : results) {
                        all = all && r.pass;
                        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.index << " " << r.name
                                  << ": " << r.detail << "\n";
                    }
                }
                return all ? kExitOk : kExitVerifyFailed;
            }
            VerifyOptions opt;
            if (corpus_run->count("--order")) opt.K = order;
            if (corpus_run->count("--nmax")) opt.nmax = nmax;
            opt.precision = corpus_run->count("--precision")
                                ? static_cast<mpfr_prec_t>(precision_flag)
                                : default_prec;
            const std::vector<VerificationReport> reports = run_corpus_sweep(opt);
            bool all = true;
            if (format == "json") {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& rep : reports) {
                    all = all && rep.passed();
                    arr.push_back(report_to_json(rep));
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& rep : reports) {
                    all = all && rep.passed();
                    int ok = 0;
                    for (const auto& c : rep.checks) ok += c.pass ? 1 : 0;
                    std::cout << (rep.passed() ? "[ ok ] " : "[FAIL] ") << rep.model_id << "  ("
                              << ok << "/" << rep.checks.size() << " checks)\n";
                }
                std::cout << (all ? "all models verified\n" : "some models FAILED\n");
            }
            return all ? kExitOk : kExitVerifyFailed;
        }

        Problem problem = sel.load();

        if (expand->parsed()) {
            const mpfr_prec_t prec = expand->count("--precision")
                                         ? static_cast<mpfr_prec_t>(precision_flag)
                                         : default_prec;
            const int K = expand->count("--order") ? order : problem.options.K;
            ExpansionVariant ev = expand_model(problem.model, K, prec);
            std::string text;
            if (format == "json") {
                nlohmann::ordered_json j;
                j["model"] = problem.model.id;
                if (!problem.model.description.empty())
                    j["description"] = problem.model.description;
                j["order"] = K;
                j["expansion"] = expansion_to_json(ev, prec);
                text = j.dump(2) + "\n";
            } else if (format == "csv") {
                text = expansion_to_csv(ev, prec);
            } else {
                text = "model " + problem.model.id + ", order " + std::to_string(K) + "\n" +
                       expansion_to_text(ev, prec);
            }
            emit(text, output_path);
            return kExitOk;
        }

        // verify
        VerifyOptions opt = problem.options;
        if (verify->count("--order")) opt.K = order;
        if (verify->count("--nmax")) opt.nmax = nmax;
        if (verify->count("--precision"))
            opt.precision = static_cast<mpfr_prec_t>(precision_flag);
        else if (opt.precision == VerifyOptions{}.precision)
            opt.precision = default_prec;
        if (no_numeric) opt.numeric_check = false;
        VerificationReport rep = verify_model(problem.model, opt);
        std::string text;
        if (format == "json")
            text = report_to_json(rep).dump(2) + "\n";
        else if (format == "csv")
            text = report_to_csv(rep);
        else
            text = report_to_text(rep);
        emit(text, output_path);
        return rep.passed() ? kExitOk : kExitVerifyFailed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace tauber
