// pdom: command-line front end for the power domination toolkit.
//
// Exit codes: 0 success / all checks pass, 1 a requested check failed or the
// bound was violated, 2 input error, 3 resource cap exceeded.

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdom/bound_lab.hpp"
#include "pdom/exact.hpp"
#include "pdom/families.hpp"
#include "pdom/io.hpp"
#include "pdom/propagation.hpp"
#include "pdom/tree_dp.hpp"

namespace {

using namespace pdom;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path + " for writing");
    f << content;
}

// "1,3,5" with 1-based ids; empty string means the empty set.
VertexSet parse_id_list(const std::string& text, int n, const char* what) {
    VertexSet s(n);
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        std::string tok = text.substr(i, j - i);
        // trim spaces
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (!tok.empty()) {
            int id = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw InputError(std::string(what) + ": '" + tok + "' is not a vertex id");
            if (id < 1 || id > n)
                throw InputError(std::string(what) + ": vertex " + tok + " out of range [1, " +
                                 std::to_string(n) + "]");
            s.set(id - 1);
        }
        i = j + 1;
    }
    return s;
}

std::string format_number(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void print_trace(const ObservationTrace& trace) {
    for (int s = 0; s < trace.steps(); ++s) {
        std::cout << "step " << s << ":";
        for (int v : trace.newly(s)) std::cout << " " << v + 1;
        std::cout << "\n";
    }
}

struct CheckFailed {};  // a requested predicate came back false; exit 1

int cmd_solve_exact(const std::string& graph_path, const std::string& weights_path,
                    bool with_trace) {
    Graph g = parse_graph(read_input(graph_path));
    PdsResult res;
    if (!weights_path.empty()) {
        auto weights = parse_weights(read_input(weights_path), g.vertex_count());
        res = min_weight_pds(g, weights);
        std::cout << "gamma_p_w = " << format_number(res.weight) << "\n";
    } else {
        res = min_pds(g);
        std::cout << "gamma_p = " << res.cardinality << "\n";
    }
    std::cout << "set = " << format_id_set(res.set) << "\n";
    if (with_trace) print_trace(res.certificate);
    return 0;
}

int cmd_solve_tree(const std::string& tree_path, bool emit_set) {
    std::vector<int> old_of_new;
    WeightedTree t = parse_tree(read_input(tree_path), &old_of_new);
    PdsResult res = wpdt(t);
    std::cout << "gamma_p_w = " << format_number(res.weight) << "\n";
    if (emit_set) {
        VertexSet original(t.vertex_count());
        res.set.for_each([&](int v) { original.set(old_of_new[static_cast<std::size_t>(v)]); });
        std::cout << "set = " << format_id_set(original) << "\n";
    }
    return 0;
}

int cmd_propagate(const std::string& graph_path, const std::string& seed_csv,
                  const std::string& pre_csv) {
    Graph g = parse_graph(read_input(graph_path));
    VertexSet seed = parse_id_list(seed_csv, g.vertex_count(), "--seed");
    VertexSet pre = parse_id_list(pre_csv, g.vertex_count(), "--pre");
    ObservationTrace trace = closure_trace(g, seed, pre);
    std::cout << "closure = " << format_id_set(trace.observed_set(g.vertex_count())) << "\n";
    print_trace(trace);
    return 0;
}

int cmd_check(const std::string& graph_path, bool claw_free, int regular_k, bool connected,
              bool bound) {
    Graph g = parse_graph(read_input(graph_path));
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << name << ": " << (ok ? "true" : "false") << "\n";
        all_ok = all_ok && ok;
    };
    if (connected) report("connected", is_connected(g));
    if (regular_k >= 0) report("regular(" + std::to_string(regular_k) + ")", is_regular(g, regular_k));
    if (claw_free) report("clawfree", is_claw_free(g));
    if (bound) {
        PdsResult res = min_pds(g);
        int limit = (g.vertex_count() + 1) / 5;
        bool ok = res.cardinality <= limit;
        std::cout << "bound: " << (ok ? "true" : "false") << " (gamma_p=" << res.cardinality
                  << ", floor((n+1)/5)=" << limit << ")\n";
        all_ok = all_ok && ok;
    }
    if (!all_ok) throw CheckFailed{};
    return 0;
}

int cmd_lab(const LabConfig& cfg, const std::string& out_path) {
    LabResult lab = run_lab(cfg);
    write_report(lab.records, out_path);
    std::cout << "report: " << out_path << " (" << lab.records.size() << " rows)\n";
    std::cout << "skipped: " << lab.skipped.size() << "\n";
    std::cout << "violations: " << lab.violations.size() << "\n";
    for (const auto& name : lab.violations)
        std::cout << "BOUND VIOLATION: " << name << " (graph dumped to " << cfg.violation_dir
                  << "/" << name << ".violation.graph)\n";
    for (const auto& rec : lab.records)
        if (rec.refutes_conjecture())
            std::cout << "conjecture_refuted: " << rec.instance << " (gamma_p=" << rec.gamma_p
                      << " > n/5=" << format_number(rec.n / 5.0) << ")\n";
    if (!lab.violations.empty()) throw CheckFailed{};
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pdom: power domination toolkit"};
    app.require_subcommand(1);

    // solve-exact
    auto* solve_exact = app.add_subcommand("solve-exact", "exact gamma_p / gamma_p^w by subset search");
    std::string se_graph = "-", se_weights;
    bool se_trace = false;
    solve_exact->add_option("--graph", se_graph, "edge-list file, or - for stdin");
    solve_exact->add_option("--weights", se_weights, "per-vertex weights file");
    solve_exact->add_flag("--trace", se_trace, "print the observation steps");

    // solve-tree
    auto* solve_tree = app.add_subcommand("solve-tree", "weighted power domination on a tree (linear time)");
    std::string st_tree = "-";
    bool st_emit_set = false;
    solve_tree->add_option("--tree", st_tree, "tree document, or - for stdin");
    solve_tree->add_flag("--emit-set", st_emit_set, "also print an optimal set");

    // propagate
    auto* propagate = app.add_subcommand("propagate", "run the observation process from a seed set");
    std::string pr_graph = "-", pr_seed, pr_pre;
    propagate->add_option("--graph", pr_graph, "edge-list file, or - for stdin");
    propagate->add_option("--seed", pr_seed, "comma-separated 1-based vertex ids")->required();
    propagate->add_option("--pre", pr_pre, "vertices observed in advance (no neighbor grant)");

    // check
    auto* check = app.add_subcommand("check", "structural predicates; exit 0 iff all requested pass");
    std::string ck_graph = "-";
    bool ck_claw = false, ck_conn = false, ck_bound = false;
    int ck_regular = -1;
    check->add_option("--graph", ck_graph, "edge-list file, or - for stdin");
    check->add_flag("--claw-free", ck_claw, "no induced K_{1,3}");
    check->add_option("--regular", ck_regular, "every degree equals K");
    check->add_flag("--connected", ck_conn, "single BFS component");
    check->add_flag("--bound", ck_bound, "gamma_p <= floor((n+1)/5)");

    // gen
    auto* gen = app.add_subcommand("gen", "write a generated instance");
    gen->fallthrough();
    std::string gen_out = "-";
    gen->add_option("--out", gen_out, "output file, or - for stdout");
    gen->require_subcommand(1);
    auto* gen_ek = gen->add_subcommand("ek", "extremal r-regular claw-free family");
    int ek_r = 4, ek_k = 0;
    gen_ek->add_option("--r", ek_r, "regularity (even, >= 4)")->required();
    gen_ek->add_option("--k", ek_k, "chain length (>= 0)")->required();
    auto* gen_lk = gen->add_subcommand("lk", "chain of K_4 copies");
    int lk_k = 2;
    gen_lk->add_option("--k", lk_k, "copy count (>= 2)")->required();
    auto* gen_std = gen->add_subcommand("std", "standard family");
    std::string std_family;
    int std_n = 1, std_m = 1;
    gen_std->add_option("--family", std_family, "path|cycle|star|complete|bipartite")->required();
    gen_std->add_option("--n", std_n, "order / first partite size / leaf count")->required();
    gen_std->add_option("--m", std_m, "second partite size (bipartite)");
    auto* gen_cubic = gen->add_subcommand("cubic", "random connected cubic graph");
    int cubic_n = 4;
    std::uint64_t cubic_seed = 0;
    gen_cubic->add_option("--n", cubic_n, "order (even, >= 4)")->required();
    gen_cubic->add_option("--seed", cubic_seed, "rng seed")->required();
    auto* gen_tree = gen->add_subcommand("tree", "random weighted tree");
    int tree_n = 1, tree_lo = 1, tree_hi = 1;
    std::uint64_t tree_seed = 0;
    gen_tree->add_option("--n", tree_n, "order (>= 1)")->required();
    gen_tree->add_option("--lo", tree_lo, "minimum weight")->required();
    gen_tree->add_option("--hi", tree_hi, "maximum weight")->required();
    gen_tree->add_option("--seed", tree_seed, "rng seed")->required();

    // lab
    auto* lab = app.add_subcommand("lab", "verify the (n+1)/5 bound on generated instances");
    LabConfig cfg;
    std::string lab_out = "report.csv";
    lab->add_option("--trials", cfg.trials, "number of cubic line-graph instances");
    lab->add_option("--max-cubic", cfg.max_cubic, "largest cubic order (even, <= 12)");
    lab->add_option("--ek-max", cfg.ek_max, "include E_0..E_k");
    lab->add_option("--seed", cfg.seed, "rng seed");
    lab->add_option("--out", lab_out, "CSV report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        if (solve_exact->parsed()) return cmd_solve_exact(se_graph, se_weights, se_trace);
        if (solve_tree->parsed()) return cmd_solve_tree(st_tree, st_emit_set);
        if (propagate->parsed()) return cmd_propagate(pr_graph, pr_seed, pr_pre);
        if (check->parsed()) return cmd_check(ck_graph, ck_claw, ck_regular, ck_conn, ck_bound);
        if (gen->parsed()) {
            std::string doc;
            if (gen_ek->parsed()) doc = render_graph(gen_E(ek_r, ek_k));
            else if (gen_lk->parsed()) doc = render_graph(gen_L(lk_k));
            else if (gen_std->parsed()) {
                FamilySpec spec;
                spec.n = std_n;
                spec.m = std_m;
                if (std_family == "path") spec.family = Family::Path;
                else if (std_family == "cycle") spec.family = Family::Cycle;
                else if (std_family == "star") spec.family = Family::Star;
                else if (std_family == "complete") spec.family = Family::Complete;
                else if (std_family == "bipartite" || std_family == "complete-bipartite")
                    spec.family = Family::CompleteBipartite;
                else throw InputError("gen std: unknown family '" + std_family + "'");
                doc = render_graph(gen_standard(spec));
            } else if (gen_cubic->parsed()) {
                doc = render_graph(gen_random_cubic(cubic_n, cubic_seed));
            } else if (gen_tree->parsed()) {
                doc = render_tree(gen_random_tree(tree_n, tree_lo, tree_hi, tree_seed));
            }
            write_output(gen_out, doc);
            return 0;
        }
        if (lab->parsed()) return cmd_lab(cfg, lab_out);
    } catch (const CheckFailed&) {
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
