#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jaco/domination.hpp"
#include "jaco/verify.hpp"

namespace jaco {

struct ValueWithSource {
    std::optional<int> value;
    std::string source;  // closed-form | theorem | oracle | skipped-budget
};

struct InvariantReport {
    std::string graph;
    int n = 0;
    ValueWithSource alpha, beta, chi, gamma_value, murtage, bondage_value, gamma_minus_value;
    std::optional<int> prime_jaconian;
    std::vector<DomAnalysis> compact;
};

InvariantReport invariants_for_jaco(int n, bool with_bondage,
                                    const OracleBudget& budget = {});
// with_oracles has no effect here: an external graph has no closed forms to cross-check
InvariantReport invariants_for_graph(const SimpleGraph& g, const std::string& name,
                                     bool with_bondage, const OracleBudget& budget = {});

// oracle cross-check failures for invariants_for_jaco(..., with_oracles = true)
std::vector<std::string> oracle_mismatches(const InvariantReport& rep,
                                           const OracleBudget& budget = {});

std::string render_invariants_text(const InvariantReport& rep);
std::string render_invariants_json(const InvariantReport& rep);

struct PaperTable {
    std::string table;  // aligned text
    std::vector<VerificationRecord> records;
};
PaperTable paper_table(int from, int to, const OracleBudget& budget = {});

std::string export_rows_csv(int from, int to, const OracleBudget& budget = {});
std::string export_rows_json(int from, int to, const OracleBudget& budget = {});

}  // namespace jaco
