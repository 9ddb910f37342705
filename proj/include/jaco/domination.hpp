#pragma once

#include <vector>

#include "jaco/graph.hpp"
#include "jaco/invariant_types.hpp"
#include "jaco/oracles.hpp"

namespace jaco {

// gamma-set with its partition apparatus; cells ordered by (size, dominator index)
struct DomAnalysis {
    VertexSet gamma_set = 0;
    int theta = 0;            // 1 + fewest private neighbors over members
    int designated = 0;       // smallest member attaining theta
    std::vector<int> dom_sequence;            // ascending cell sizes
    std::vector<std::vector<int>> partition;  // cells, members ascending
    int distance_score = 0;   // sum of d(designated, other members)
};

int gamma(const SimpleGraph& g);
std::vector<VertexSet> all_gamma_sets(const SimpleGraph& g);  // lexicographic
DomAnalysis analyze_gamma_set(const SimpleGraph& g, VertexSet x);
std::vector<DomAnalysis> compact_gamma_sets(const SimpleGraph& g);  // connected only

// theta if the designated vertex has no neighbor in the set, theta - 1 otherwise
MurtageResult murtage_via_theorem(const SimpleGraph& g);

GammaMinusResult gamma_minus(const SimpleGraph& g);
BondageResult bondage(const SimpleGraph& g);

struct SpanningTreeReport {
    SimpleGraph tree;
    int delta_graph = 0, delta_tree = 0;
    int gamma_graph = 0, gamma_tree = 0;
    int murtage_graph = 0, murtage_tree = 0;
    bool preserved = false;
};

// star forest over a compact partition, joined by cross edges of g
SpanningTreeReport spanning_tree_preserving(const SimpleGraph& g);

// gamma additivity on the union plus per-component murtage additivity
bool disjoint_union_check(const std::vector<SimpleGraph>& parts,
                          const OracleBudget& budget = {});

}  // namespace jaco
