// qgain: determinants, balance tests and reduction listings for quaternion
// unit gain graphs.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgain/compensated_sum.hpp"
#include "qgain/complex_adjoint.hpp"
#include "qgain/determinant.hpp"
#include "qgain/errors.hpp"
#include "qgain/format.hpp"
#include "qgain/gain_graph.hpp"
#include "qgain/graph_json.hpp"
#include "qgain/reductions.hpp"
#include "qgain/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qgain;

constexpr int kExitParse = 2;
constexpr int kExitNonUnitGain = 3;
constexpr int kExitBudget = 4;
constexpr int kExitDisagreement = 5;

GainGraph load_graph(const std::string& path, double tol) {
    return graph_from_document(load_graph_document(path, &std::cerr), tol);
}

int run_det(const std::string& input, const std::string& method, double tol, bool as_json) {
    const GainGraph g = load_graph(input, tol);

    double direct = 0.0;
    double combinatorial = 0.0;
    if (method == "direct" || method == "both") {
        direct = det_hermitian(laplacian_checked(g, tol), tol);
    }
    if (method == "combinatorial" || method == "both") {
        combinatorial = det_laplacian_combinatorial(g, kDefaultReductionBudget, tol);
    }
    const double discrepancy = std::abs(direct - combinatorial);
    const bool agree = method != "both" || discrepancy <= tol;

    if (as_json) {
        ordered_json out;
        out["input"] = input;
        out["method"] = method;
        if (method == "direct" || method == "both") {
            out["detDirect"] = format_real(direct);
        }
        if (method == "combinatorial" || method == "both") {
            out["detCombinatorial"] = format_real(combinatorial);
        }
        if (method == "both") {
            out["discrepancy"] = format_real(discrepancy);
            out["agree"] = agree;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (method == "direct" || method == "both") {
            std::cout << "direct         " << format_real(direct) << "\n";
        }
        if (method == "combinatorial" || method == "both") {
            std::cout << "combinatorial  " << format_real(combinatorial) << "\n";
        }
        if (method == "both") {
            std::cout << "discrepancy    " << format_real(discrepancy) << "\n";
        }
    }
    return agree ? 0 : kExitDisagreement;
}

int run_balanced(const std::string& input, double tol) {
    const GainGraph g = load_graph(input, tol);
    const bool balanced = is_balanced(g, tol);
    std::cout << (balanced ? "balanced" : "unbalanced") << "\n";
    return balanced ? 0 : 1;
}

ordered_json cycle_json(const GainGraph& g, const CycleReport& c) {
    ordered_json out;
    out["vertices"] = ordered_json::array();
    for (std::size_t v : c.vertices) {
        out["vertices"].push_back(g.vertex_labels()[v]);
    }
    out["gain"] = {c.gain.w, c.gain.x, c.gain.y, c.gain.z};
    out["contribution"] = format_real(c.contribution);
    return out;
}

int run_reductions(const std::string& input, double tol, bool as_json) {
    const GainGraph g = load_graph(input, tol);
    const auto reductions = enumerate_full_vertex_reductions(g);

    ordered_json out;
    out["reductions"] = ordered_json::array();
    std::size_t unicycle_like_count = 0;
    CompensatedSum total;

    std::size_t index = 0;
    for (const Reduction& r : reductions) {
        ++index;
        const auto components = classify(r, g);
        const bool ulike = is_unicycle_like(components);
        const double det = det_reduction(r, g, DetRoute::combinatorial, tol);
        if (ulike) {
            ++unicycle_like_count;
        }
        total.add(det);

        ordered_json entry;
        entry["columns"] = ordered_json::array();
        entry["edges"] = ordered_json::array();
        for (std::size_t k : r.col_set) {
            entry["columns"].push_back(k + 1); // 1-based, as in the listings
            entry["edges"].push_back(g.edges()[k].id);
        }
        entry["kinds"] = ordered_json::array();
        entry["cycles"] = ordered_json::array();
        for (const auto& comp : components) {
            entry["kinds"].push_back(to_string(comp.kind));
            if (comp.cycle) {
                entry["cycles"].push_back(cycle_json(g, *comp.cycle));
            }
        }
        entry["unicycleLike"] = ulike;
        entry["det"] = format_real(det);
        out["reductions"].push_back(entry);

        if (!as_json) {
            std::cout << "reduction " << index << ": columns {";
            for (std::size_t k = 0; k < r.col_set.size(); ++k) {
                std::cout << (k > 0 ? "," : "") << r.col_set[k] + 1;
            }
            std::cout << "}";
            for (const auto& comp : components) {
                std::cout << " " << to_string(comp.kind);
            }
            std::cout << "  det " << format_real(det) << "\n";
            for (const auto& comp : components) {
                if (!comp.cycle) {
                    continue;
                }
                std::cout << "  cycle";
                for (std::size_t v : comp.cycle->vertices) {
                    std::cout << " " << g.vertex_labels()[v];
                }
                std::cout << "  gain " << to_string(comp.cycle->gain) << "  contribution "
                          << format_real(comp.cycle->contribution) << "\n";
            }
        }
    }

    out["unicycleLike"] = unicycle_like_count;
    out["total"] = format_real(total.value());
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "unicycle-like reductions: " << unicycle_like_count << " of "
                  << reductions.size() << "\n";
        std::cout << "total " << format_real(total.value()) << "\n";
    }
    return 0;
}

void print_report(const VerificationReport& report) {
    std::cout << report.graph_descriptor << "\n";
    if (report.lemma_results.empty()) {
        std::cout << "  det direct         " << format_real(report.det_direct) << "\n"
                  << "  det combinatorial  " << format_real(report.det_combinatorial) << "\n"
                  << "  det oracle squared " << format_real(report.det_oracle_squared) << "\n";
    }
    for (const LemmaResult& r : report.lemma_results) {
        std::cout << "  " << (r.pass ? "pass" : "FAIL") << " " << r.lemma << "\n";
        if (!r.pass) {
            std::cout << "       witness: " << r.witness << "\n";
        }
    }
    std::cout << "  max discrepancy " << format_real(report.max_discrepancy) << "\n"
              << "  result " << (report.pass ? "pass" : "FAIL") << "\n";
}

int run_verify(const std::string& input, std::uint64_t seed, std::size_t trials, double tol,
               bool as_json) {
    bool all_pass = true;
    ordered_json out;

    if (!input.empty()) {
        const GainGraph g = load_graph(input, tol);
        const VerificationReport cc = cross_check(g, tol);
        all_pass = all_pass && cc.pass;
        if (as_json) {
            out["crossCheck"] = ordered_json::parse(cc.to_json());
        } else {
            print_report(cc);
        }
    }

    const VerificationReport suite = run_lemma_suite(seed, trials);
    all_pass = all_pass && suite.pass;
    if (as_json) {
        out["lemmaSuite"] = ordered_json::parse(suite.to_json());
        out["pass"] = all_pass;
        std::cout << out.dump(2) << "\n";
    } else {
        print_report(suite);
        std::cout << "overall: " << (all_pass ? "pass" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"determinants of Laplacian matrices of quaternion unit gain graphs"};
    app.require_subcommand(1);

    std::string input;
    std::string method{"both"};
    double tol = kDefaultTol;
    bool as_json = false;
    std::uint64_t seed = 0;
    std::size_t trials = 25;

    CLI::App* det = app.add_subcommand(
        "det", "Laplacian determinant by the Hermitian and/or combinatorial route");
    det->add_option("--input", input, "graph JSON file")->required();
    det->add_option("--method", method, "direct | combinatorial | both")
        ->check(CLI::IsMember({"direct", "combinatorial", "both"}));
    det->add_option("--tol", tol, "comparison tolerance");
    det->add_flag("--json", as_json, "machine-readable output");

    CLI::App* balanced = app.add_subcommand("balanced", "balance test (exit 0/1)");
    balanced->add_option("--input", input, "graph JSON file")->required();
    balanced->add_option("--tol", tol, "neutrality tolerance");

    CLI::App* reductions =
        app.add_subcommand("reductions", "list all full-vertex reductions");
    reductions->add_option("--input", input, "graph JSON file")->required();
    reductions->add_option("--tol", tol, "tolerance");
    reductions->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-route checks and the randomized lemma suite");
    verify->add_option("--input", input, "optional graph JSON file to cross-check");
    verify->add_option("--seed", seed, "lemma suite seed");
    verify->add_option("--trials", trials, "random instances per lemma");
    verify->add_option("--tol", tol, "tolerance");
    verify->add_flag("--json", as_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (det->parsed()) {
            return run_det(input, method, tol, as_json);
        }
        if (balanced->parsed()) {
            return run_balanced(input, tol);
        }
        if (reductions->parsed()) {
            return run_reductions(input, tol, as_json);
        }
        if (verify->parsed()) {
            return run_verify(input, seed, trials, tol, as_json);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NonUnitGain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonUnitGain;
    } catch (const GainsNotInLipschitzUnits& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonUnitGain;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
