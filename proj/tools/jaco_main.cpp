#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jaco/closed_forms.hpp"
#include "jaco/domination.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/report.hpp"
#include "jaco/verify.hpp"

namespace {

std::string arcs_as_edge_list(const jaco::JacoGraph& g) {
    std::string out = std::to_string(g.order());
    for (const auto& [u, v] : g.arcs())
        out += "\n" + std::to_string(u) + " " + std::to_string(v);
    return out;
}

int cmd_build(int n, bool directed, const std::string& format) {
    jaco::JacoGraph g = jaco::JacoGraph::build(n);
    if (format == "json")
        std::cout << g.to_json();
    else if (format == "edgelist")
        std::cout << (directed ? arcs_as_edge_list(g) : g.underlying().to_edge_list());
    else
        std::cout << g.to_dot(directed);
    return 0;
}

int cmd_invariants(int n, const std::string& edges_path, bool with_bondage,
                   bool with_oracles) {
    jaco::OracleBudget budget;
    jaco::InvariantReport rep;
    if (!edges_path.empty()) {
        std::ifstream in(edges_path);
        if (!in) {
            std::cerr << "cannot open " << edges_path << "\n";
            return 2;
        }
        std::ostringstream text;
        text << in.rdbuf();
        jaco::SimpleGraph g = [&] {
            try {
                return jaco::SimpleGraph::from_edge_list_text(text.str());
            } catch (const std::exception& e) {
                throw std::invalid_argument(edges_path + ": " + e.what());
            }
        }();
        rep = jaco::invariants_for_graph(g, edges_path, with_bondage, budget);
    } else {
        rep = jaco::invariants_for_jaco(n, with_bondage, budget);
    }
    std::cout << jaco::render_invariants_text(rep) << jaco::render_invariants_json(rep);
    if (with_oracles) {
        auto bad = jaco::oracle_mismatches(rep, budget);
        for (const auto& line : bad) std::cerr << "oracle mismatch: " << line << "\n";
        if (!bad.empty()) return 1;
    }
    return 0;
}

int cmd_paper_table(int from, int to) {
    jaco::PaperTable t = jaco::paper_table(from, to);
    std::cout << t.table;
    for (const auto& r : t.records) std::cout << jaco::to_json_line(r) << "\n";
    return 0;
}

int cmd_verify(int from, int to, std::vector<std::string> checks) {
    if (from < 1 || from > to) throw std::invalid_argument("bad range");
    if (checks.empty()) checks = jaco::all_check_names();
    for (const auto& c : checks)
        if (!jaco::is_known_check(c)) throw std::invalid_argument("unknown check: " + c);
    bool ok = true;
    for (int n = from; n <= to; ++n) {
        for (const auto& name : jaco::all_check_names()) {
            if (std::find(checks.begin(), checks.end(), name) == checks.end()) continue;
            jaco::CheckOutcome outcome = jaco::run_check(name, n, n);
            for (const auto& r : outcome.records) std::cout << jaco::to_json_line(r) << "\n";
            ok = ok && outcome.internal_ok;
        }
    }
    return ok ? 0 : 1;
}

int cmd_export(int from, int to, const std::string& to_format, const std::string& out_path) {
    std::string body = to_format == "csv" ? jaco::export_rows_csv(from, to)
                                          : jaco::export_rows_json(from, to);
    if (out_path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(out_path);
    out << body;
    out.flush();
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Jaco graph workbench"};
    app.require_subcommand(1);

    int build_n = 0;
    bool directed = false;
    std::string format = "dot";
    auto* build = app.add_subcommand("build", "construct J_n and print it");
    build->add_option("N", build_n, "graph order")->required();
    build->add_flag("--directed", directed, "keep arc directions");
    build->add_option("--format", format, "dot, json or edgelist")
        ->check(CLI::IsMember({"dot", "json", "edgelist"}));

    int inv_n = 0;
    std::string edges_path;
    bool with_bondage = false, with_oracles = false;
    auto* inv = app.add_subcommand("invariants", "invariant table for one graph");
    inv->add_option("N", inv_n, "order of J_n");
    inv->add_option("--edges", edges_path, "edge list file instead of J_n");
    inv->add_flag("--with-bondage", with_bondage, "also compute bondage and gamma-minus");
    inv->add_flag("--with-oracles", with_oracles, "cross-check against brute force");

    int pt_from = 1, pt_to = 13;
    auto* pt = app.add_subcommand("paper-table", "murtage table with verification records");
    pt->add_option("--from", pt_from, "first n");
    pt->add_option("--to", pt_to, "last n");

    int v_from = 0, v_to = 0;
    std::vector<std::string> checks;
    auto* ver = app.add_subcommand("verify", "emit verification records as NDJSON");
    ver->add_option("--from", v_from, "first n")->required();
    ver->add_option("--to", v_to, "last n")->required();
    ver->add_option("--checks", checks, "comma separated check names")->delimiter(',');

    int e_from = 0, e_to = 0;
    std::string to_format, out_path;
    auto* exp = app.add_subcommand("export", "invariant rows for a range of n");
    exp->add_option("--from", e_from, "first n")->required();
    exp->add_option("--to", e_to, "last n")->required();
    exp->add_option("--to-format", to_format, "csv or json")
        ->required()
        ->check(CLI::IsMember({"csv", "json"}));
    exp->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(build_n, directed, format);
        if (inv->parsed()) {
            bool have_n = inv->count("N") > 0, have_file = !edges_path.empty();
            if (have_n == have_file)
                throw std::invalid_argument("give exactly one of N or --edges FILE");
            if (have_file && with_oracles)
                throw std::invalid_argument("--with-oracles applies to J_n only");
            return cmd_invariants(inv_n, edges_path, with_bondage, with_oracles);
        }
        if (pt->parsed()) return cmd_paper_table(pt_from, pt_to);
        if (ver->parsed()) return cmd_verify(v_from, v_to, checks);
        if (exp->parsed()) return cmd_export(e_from, e_to, to_format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
