#include "jaco/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "jaco/closed_forms.hpp"
#include "jaco/jaco_graph.hpp"
#include "json.hpp"

namespace jaco {

namespace {

std::string fmt_seq(const std::vector<int>& xs) {
    std::string out = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(xs[i]);
    }
    return out + ")";
}

void add_alterations(InvariantReport& rep, const SimpleGraph& g, const OracleBudget& budget) {
    if (g.order() > budget.max_alteration) {
        rep.bondage_value = {std::nullopt, "skipped-budget"};
        rep.gamma_minus_value = {std::nullopt, "skipped-budget"};
        return;
    }
    if (g.edge_count() == 0)
        rep.bondage_value = {std::nullopt, "skipped-edgeless"};
    else
        rep.bondage_value = {bondage(g).value, "oracle"};
    rep.gamma_minus_value = {gamma_minus(g).value, "oracle"};
}

nlohmann::json analysis_json(const DomAnalysis& a) {
    nlohmann::json j;
    j["gamma_set"] = vs_members(a.gamma_set);
    j["theta"] = a.theta;
    j["designated"] = a.designated;
    j["dom_sequence"] = a.dom_sequence;
    j["partition"] = a.partition;
    j["distance_score"] = a.distance_score;
    return j;
}

}  // namespace

InvariantReport invariants_for_jaco(int n, bool with_bondage, const OracleBudget& budget) {
    JacoGraph j = JacoGraph::build(n);
    InvariantReport rep;
    rep.graph = "J_" + std::to_string(n);
    rep.n = n;
    int a = independence_trace(j).alpha;
    rep.alpha = {a, "closed-form"};
    rep.beta = {n - a, "closed-form"};
    rep.chi = {chromatic_closed_form(j), "closed-form"};
    rep.gamma_value = {gamma_recursion(n), "closed-form"};
    rep.murtage = {murtage_via_theorem(j.underlying()).value, "theorem"};
    rep.prime_jaconian = j.prime_jaconian();
    rep.compact = compact_gamma_sets(j.underlying());
    if (with_bondage) add_alterations(rep, j.underlying(), budget);
    return rep;
}

InvariantReport invariants_for_graph(const SimpleGraph& g, const std::string& name,
                                     bool with_bondage, const OracleBudget& budget) {
    InvariantReport rep;
    rep.graph = name;
    rep.n = g.order();
    if (g.order() <= budget.max_independence) {
        int a = alpha_oracle(g, budget);
        rep.alpha = {a, "oracle"};
        rep.beta = {g.order() - a, "oracle"};
    } else {
        rep.alpha = {std::nullopt, "skipped-budget"};
        rep.beta = {std::nullopt, "skipped-budget"};
    }
    if (g.order() <= budget.max_chromatic)
        rep.chi = {chi_oracle(g, budget), "oracle"};
    else
        rep.chi = {std::nullopt, "skipped-budget"};
    rep.gamma_value = {gamma(g), "oracle"};
    if (g.is_connected() && g.order() <= budget.max_domination) {
        rep.murtage = {murtage_via_theorem(g).value, "theorem"};
        rep.compact = compact_gamma_sets(g);
    } else {
        rep.murtage = {std::nullopt,
                       g.is_connected() ? "skipped-budget" : "skipped-disconnected"};
    }
    if (with_bondage) add_alterations(rep, g, budget);
    return rep;
}

std::vector<std::string> oracle_mismatches(const InvariantReport& rep,
                                           const OracleBudget& budget) {
    std::vector<std::string> out;
    SimpleGraph g = JacoGraph::build(rep.n).underlying();
    auto clash = [&](const char* what, int formula, int oracle) {
        if (formula != oracle)
            out.push_back(std::string(what) + ": formula " + std::to_string(formula) +
                          " vs oracle " + std::to_string(oracle));
    };
    if (rep.alpha.value && rep.n <= budget.max_independence)
        clash("alpha", *rep.alpha.value, alpha_oracle(g, budget));
    if (rep.chi.value && rep.n <= budget.max_chromatic)
        clash("chi", *rep.chi.value, chi_oracle(g, budget));
    if (rep.gamma_value.value && rep.n <= budget.max_domination)
        clash("gamma", *rep.gamma_value.value, gamma_oracle(g, budget));
    if (rep.murtage.value && rep.n <= budget.max_alteration)
        clash("murtage", *rep.murtage.value, murtage_oracle(g, budget).value);
    return out;
}

std::string render_invariants_text(const InvariantReport& rep) {
    std::ostringstream out;
    auto row = [&](const char* name, const ValueWithSource& v) {
        out << std::left << std::setw(12) << name;
        if (v.value)
            out << std::setw(6) << *v.value << v.source;
        else
            out << std::setw(6) << "-" << v.source;
        out << "\n";
    };
    out << std::left << std::setw(12) << "graph" << rep.graph << "\n";
    out << std::left << std::setw(12) << "n" << rep.n << "\n";
    row("alpha", rep.alpha);
    row("beta", rep.beta);
    row("chi", rep.chi);
    row("gamma", rep.gamma_value);
    row("murtage", rep.murtage);
    if (!rep.bondage_value.source.empty()) row("bondage", rep.bondage_value);
    if (!rep.gamma_minus_value.source.empty()) row("gamma-minus", rep.gamma_minus_value);
    if (rep.prime_jaconian)
        out << std::left << std::setw(12) << "prime" << "v" << *rep.prime_jaconian << "\n";
    for (const auto& a : rep.compact)
        out << "compact " << vs_text(a.gamma_set) << "  sequence " << fmt_seq(a.dom_sequence)
            << "\n";
    return out.str();
}

std::string render_invariants_json(const InvariantReport& rep) {
    nlohmann::json j;
    j["graph"] = rep.graph;
    j["n"] = rep.n;
    auto put = [&](const char* name, const ValueWithSource& v) {
        if (v.source.empty()) return;
        nlohmann::json cell;
        if (v.value)
            cell["value"] = *v.value;
        else
            cell["value"] = nullptr;
        cell["source"] = v.source;
        j[name] = cell;
    };
    put("alpha", rep.alpha);
    put("beta", rep.beta);
    put("chi", rep.chi);
    put("gamma", rep.gamma_value);
    put("murtage", rep.murtage);
    put("bondage", rep.bondage_value);
    put("gamma_minus", rep.gamma_minus_value);
    if (rep.prime_jaconian) j["prime_jaconian"] = *rep.prime_jaconian;
    auto& arr = j["compact_gamma_sets"] = nlohmann::json::array();
    for (const auto& a : rep.compact) arr.push_back(analysis_json(a));
    return j.dump(2) + "\n";
}

PaperTable paper_table(int from, int to, const OracleBudget& budget) {
    if (from < 1 || from > to || to > 13)
        throw std::invalid_argument("paper table covers n = 1..13");
    PaperTable out;
    std::ostringstream table;
    table << "  n  m(theorem)  m(oracle)  paper  verdict\n";
    for (int n = from; n <= to; ++n) {
        SimpleGraph g = JacoGraph::build(n).underlying();
        int thm = murtage_via_theorem(g).value;
        int orc = murtage_oracle(g, budget).value;
        int paper = paper_murtage_table()[static_cast<size_t>(n) - 1];
        const char* verdict = (thm == orc && orc == paper) ? "AGREE" : "DISAGREE";
        table << std::right << std::setw(3) << n << "  " << std::setw(10) << thm << "  "
              << std::setw(9) << orc << "  " << std::setw(5) << paper << "  " << verdict
              << "\n";
    }
    out.table = table.str();
    out.records = run_check("murtage", from, to, budget).records;
    return out;
}

namespace {

struct ExportRow {
    int n, alpha, beta, chi, gamma;
    int murtage;
    std::optional<int> bondage;
};

ExportRow export_row(int n, const OracleBudget& budget) {
    JacoGraph j = JacoGraph::build(n);
    ExportRow r{};
    r.n = n;
    r.alpha = independence_trace(j).alpha;
    r.beta = n - r.alpha;
    r.chi = chromatic_closed_form(j);
    r.gamma = gamma_recursion(n);
    r.murtage = murtage_via_theorem(j.underlying()).value;
    if (n <= budget.max_alteration && j.underlying().edge_count() > 0)
        r.bondage = bondage(j.underlying()).value;
    return r;
}

}  // namespace

std::string export_rows_csv(int from, int to, const OracleBudget& budget) {
    if (from < 1 || from > to) throw std::invalid_argument("bad range");
    std::string out = "n,alpha,beta,chi,gamma,murtage,bondage\n";
    for (int n = from; n <= to; ++n) {
        ExportRow r = export_row(n, budget);
        out += std::to_string(r.n) + "," + std::to_string(r.alpha) + "," +
               std::to_string(r.beta) + "," + std::to_string(r.chi) + "," +
               std::to_string(r.gamma) + "," + std::to_string(r.murtage) + ",";
        if (r.bondage) out += std::to_string(*r.bondage);
        out += "\n";
    }
    return out;
}

std::string export_rows_json(int from, int to, const OracleBudget& budget) {
    if (from < 1 || from > to) throw std::invalid_argument("bad range");
    nlohmann::json rows = nlohmann::json::array();
    for (int n = from; n <= to; ++n) {
        ExportRow r = export_row(n, budget);
        nlohmann::json row;
        row["n"] = r.n;
        row["alpha"] = r.alpha;
        row["beta"] = r.beta;
        row["chi"] = r.chi;
        row["gamma"] = r.gamma;
        row["murtage"] = r.murtage;
        if (r.bondage)
            row["bondage"] = *r.bondage;
        else
            row["bondage"] = nullptr;
        rows.push_back(row);
    }
    return rows.dump(2) + "\n";
}

}  // namespace jaco
