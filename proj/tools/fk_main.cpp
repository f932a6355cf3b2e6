// Command line driver: construct extremal candidates, solve Dirichlet
// eigenproblems, check orderings, enumerate realization classes, and run
// the verification sweeps.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fk/canonical.hpp"
#include "fk/construct.hpp"
#include "fk/examples.hpp"
#include "fk/io.hpp"
#include "fk/ordering.hpp"
#include "fk/search.hpp"
#include "fk/spectral.hpp"
#include "fk/suites.hpp"

namespace {

using nlohmann::json;

fk::DegreeSequence parse_pi(const std::string& text) {
    auto list = fk::parse_degree_list(text);
    if (!list) throw CLI::ValidationError("--pi", "expected comma-separated integers");
    auto v = fk::validate_degree_sequence(*std::move(list));
    if (!v.ok()) throw CLI::ValidationError("--pi", v.violation);
    return *std::move(v.sequence);
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string format_lambda(double lambda, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, lambda);
    return buf;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
    if (const char* dir = std::getenv("FK_CACHE_DIR"); dir && *dir)
        return std::filesystem::path(dir);
    return std::nullopt;
}

int cmd_construct(const std::string& pi_text, const std::string& variant,
                  const std::string& out, const std::string& dot_out, bool eigen,
                  const std::string& format) {
    const auto pi = parse_pi(pi_text);
    fk::BoundaryGraph g = [&] {
        if (variant == "auto") return fk::construct_extremal_candidate(pi);
        if (variant == "ustar") return fk::construct_u_star(pi);
        if (variant == "u1") return fk::construct_u1(pi);
        if (variant == "u2") return fk::construct_u2(pi);
        throw CLI::ValidationError("--variant", "expected auto|ustar|u1|u2");
    }();

    if (format == "dot")
        write_or_print(fk::graph_to_dot(g), out);
    else if (format == "text") {
        std::string text = "case: " + std::string(to_string(fk::classify_construction_case(pi))) +
                           "\nn: " + std::to_string(g.vertex_count()) + "\nedges:";
        for (const auto& [u, v] : g.edges())
            text += " " + std::to_string(u) + "-" + std::to_string(v);
        write_or_print(text + "\n", out);
    } else {
        write_or_print(fk::graph_to_json(g), out);
    }
    if (!dot_out.empty()) write_or_print(fk::graph_to_dot(g), dot_out);
    if (eigen)
        std::cout << "lambda = " << format_lambda(fk::first_eigenpair(g).lambda, 4) << '\n';
    return 0;
}

int cmd_eigen(const std::string& graph_path, int precision, bool with_function,
              std::string format, double tol) {
    if (format.empty()) format = "text";
    const auto g = fk::load_graph(graph_path, /*allow_tree=*/true);
    const auto ep = fk::first_eigenpair(g, tol);
    if (format == "json") {
        json j{{"lambda", ep.lambda}};
        if (with_function) j["f"] = ep.f;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << format_lambda(ep.lambda, precision) << '\n';
        if (with_function)
            for (int v = 0; v < g.vertex_count(); ++v)
                std::cout << "f(" << v << ") = " << format_lambda(ep.f[v], precision) << '\n';
    }
    return 0;
}

int cmd_check(const std::string& graph_path, std::string format) {
    if (format.empty()) format = "text";
    const auto g = fk::load_graph(graph_path);
    const auto ep = fk::first_eigenpair(g);
    const auto ord = fk::induced_ordering(g, ep);
    const auto slo = fk::check_slo(g, ord);
    const auto cycle = fk::find_cycle(g);
    const bool ball = fk::is_ball_approximation(g, ord.root);
    const bool monotone = fk::check_degree_monotone(g, ord);

    if (format == "json") {
        json j{{"n", g.vertex_count()},
               {"lambda", ep.lambda},
               {"root", ord.root},
               {"cycle", cycle},
               {"induced_order", ord.order},
               {"slo", slo.ok},
               {"slo_violated_condition", slo.ok ? json() : json(slo.violated_condition)},
               {"ball_approximation", ball},
               {"degree_monotone", monotone}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "lambda = " << format_lambda(ep.lambda, 4) << "\nroot = " << ord.root
                  << "\nslo = " << (slo.ok ? "yes" : "no")
                  << "\nball approximation = " << (ball ? "yes" : "no")
                  << "\ndegree monotone = " << (monotone ? "yes" : "no") << '\n';
    }
    return 0;
}

int cmd_enumerate(const std::string& pi_text, bool count_only, int cap, int threads) {
    const auto pi = parse_pi(pi_text);
    fk::SearchOptions opts{.cap = cap, .threads = threads, .cache_dir = cache_dir_from_env()};
    if (count_only) {
        int count = 0;
        fk::for_each_unicyclic(pi, [&](const fk::BoundaryGraph&) { ++count; }, opts);
        std::cout << count << '\n';
        return 0;
    }
    for (const auto& g : fk::enumerate_unicyclic(pi, opts))
        std::cout << fk::graph_to_json(g) << '\n';
    return 0;
}

void print_suite(const fk::SuiteResult& r) {
    std::printf("%-26s cases=%-6d strict=%-5d violations=%d -> %s\n", r.name.c_str(),
                r.cases_run, r.strict_cases, r.violations, r.pass() ? "pass" : "FAIL");
    for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
}

int cmd_verify(int n_max, const std::string& suite, int cases, std::uint64_t seed, int threads,
               const std::string& out_dir) {
    fk::SearchOptions search_opts{.cap = std::max(n_max, 13), .threads = threads,
                                  .cache_dir = cache_dir_from_env()};
    fk::SuiteOptions suite_opts{.cases = cases, .seed = seed, .threads = threads};
    bool ok = true;
    const auto want = [&](const char* name) { return suite == "all" || suite == name; };

    std::optional<fk::TheoremSummary> theorem;
    if (want("theorem12")) {
        theorem = fk::verify_theorem_1_2(n_max, search_opts);
        std::printf("%-26s sequences=%-3zu -> %s\n", "theorem-1.2-sweep", theorem->rows.size(),
                    theorem->all_pass ? "pass" : "FAIL");
        ok &= theorem->all_pass;
    }
    if (want("orderings")) {
        const auto r = fk::run_extremal_ordering_sweep(n_max, search_opts);
        print_suite(r);
        ok &= r.pass();
    }
    if (want("spectra")) {
        const auto r = fk::run_spectral_invariant_sweep(n_max, search_opts);
        print_suite(r);
        ok &= r.pass();
    }
    if (want("lemma33")) {
        const auto r = fk::run_swap_monotonicity_suite(suite_opts);
        print_suite(r);
        ok &= r.pass();
    }
    if (want("lemma41")) {
        const auto r = fk::run_shift_monotonicity_suite(suite_opts);
        print_suite(r);
        ok &= r.pass();
    }
    if (want("rayleigh")) {
        const auto r = fk::run_rayleigh_bound_suite(suite_opts);
        print_suite(r);
        ok &= r.pass();
    }

    if (!out_dir.empty() && theorem) {
        std::filesystem::create_directories(out_dir);
        const auto dir = std::filesystem::path(out_dir);
        write_or_print(fk::summary_to_json(*theorem), (dir / "theorem.json").string());
        write_or_print(fk::rows_to_csv(theorem->rows), (dir / "theorem.csv").string());
        if (theorem->counterexample) {
            fk::save_graph(theorem->counterexample->second, dir / "counterexample.json");
            std::printf("counterexample written to %s\n",
                        (dir / "counterexample.json").string().c_str());
        }
    }
    return ok ? 0 : 1;
}

int cmd_conjecture(int n_max, int cap, int threads, std::string format,
                   const std::string& out) {
    if (format.empty()) format = "json";
    fk::SearchOptions opts{.cap = std::max(cap, n_max), .threads = threads,
                           .cache_dir = cache_dir_from_env()};
    const auto summary = fk::explore_conjecture_5_3(n_max, opts);
    if (format == "csv")
        write_or_print(fk::rows_to_csv(summary.rows), out);
    else
        write_or_print(fk::summary_to_json(summary), out);
    return 0;  // report-only by design
}

int cmd_reference(double tol, std::string format) {
    if (format.empty()) format = "text";
    const auto checks = fk::examples::reference_checks(tol);
    bool ok = true;
    if (format == "json") {
        json rows = json::array();
        for (const auto& c : checks) {
            rows.push_back({{"name", c.name},
                            {"expected", c.expected},
                            {"computed", c.computed},
                            {"pass", c.pass}});
            ok &= c.pass;
        }
        std::cout << json{{"tolerance", tol}, {"checks", rows}}.dump(2) << '\n';
    } else {
        for (const auto& c : checks) {
            std::printf("%-12s expected %.4f computed %.6f -> %s\n", c.name, c.expected,
                        c.computed, c.pass ? "pass" : "FAIL");
            ok &= c.pass;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet spectra of unicyclic graphs with boundary"};
    app.require_subcommand(1);

    std::string pi_text, graph_path, variant = "auto", format, out, dot_out,
                suite = "all", out_dir;
    bool eigen = false, with_function = false, count_only = false;
    int precision = 4, n_max = 8, cases = 1000, threads = 1, cap = 13;
    double tol = 1e-10, ref_tol = fk::examples::kReferenceTol;
    std::uint64_t seed = 7;

    auto* construct = app.add_subcommand("construct", "build the extremal candidate for a sequence");
    construct->add_option("--pi", pi_text, "degree sequence, comma separated")->required();
    construct->add_option("--variant", variant, "auto|ustar|u1|u2");
    construct->add_option("--format", format, "json|dot|text");
    construct->add_option("--out", out, "output file (default stdout)");
    construct->add_option("--dot", dot_out, "also write a DOT file");
    construct->add_flag("--eigen", eigen, "print the first Dirichlet eigenvalue");

    auto* eig = app.add_subcommand("eigen", "first Dirichlet eigenvalue of a graph file");
    eig->add_option("--graph", graph_path, "graph JSON file")->required();
    eig->add_option("--precision", precision, "printed decimals (default 4)");
    eig->add_option("--tol", tol, "eigensolver tolerance");
    eig->add_option("--format", format, "text|json");
    eig->add_flag("--eigenfunction", with_function, "also print the eigenfunction");

    auto* check = app.add_subcommand("check", "ordering and shape diagnostics for a graph file");
    check->add_option("--graph", graph_path, "graph JSON file")->required();
    check->add_option("--format", format, "text|json");

    auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes realizing a sequence");
    enumerate->add_option("--pi", pi_text, "degree sequence")->required();
    enumerate->add_option("--cap", cap, "vertex count cap (default 13)");
    enumerate->add_option("--threads", threads, "worker threads");
    enumerate->add_flag("--count-only", count_only, "print only the class count");

    auto* verify = app.add_subcommand("verify", "run the verification sweeps and property suites");
    verify->add_option("--n-max", n_max, "sweep sequences up to this length")->required();
    verify->add_option("--suite", suite, "all|theorem12|orderings|spectra|lemma33|lemma41|rayleigh");
    verify->add_option("--cases", cases, "random cases per property suite");
    verify->add_option("--seed", seed, "suite seed");
    verify->add_option("--threads", threads, "worker threads");
    verify->add_option("--out-dir", out_dir, "write CSV/JSON artifacts here");

    auto* conjecture = app.add_subcommand("conjecture", "verdict table for sequences containing a 2");
    conjecture->add_option("--n-max", n_max, "sweep sequences up to this length")->required();
    conjecture->add_option("--cap", cap, "enumeration cap");
    conjecture->add_option("--threads", threads, "worker threads");
    conjecture->add_option("--format", format, "json|csv");
    conjecture->add_option("--out", out, "output file (default stdout)");

    auto* reference = app.add_subcommand("reference", "recompute the published example eigenvalues");
    reference->add_option("--tol", ref_tol, "absolute tolerance (default 5e-5)");
    reference->add_option("--format", format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed())
            return cmd_construct(pi_text, variant, out, dot_out, eigen, format);
        if (eig->parsed()) return cmd_eigen(graph_path, precision, with_function, format, tol);
        if (check->parsed()) return cmd_check(graph_path, format);
        if (enumerate->parsed()) return cmd_enumerate(pi_text, count_only, cap, threads);
        if (verify->parsed()) return cmd_verify(n_max, suite, cases, seed, threads, out_dir);
        if (conjecture->parsed()) return cmd_conjecture(n_max, cap, threads, format, out);
        if (reference->parsed()) return cmd_reference(ref_tol, format);
    } catch (const CLI::Error& err) {
        return app.exit(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
