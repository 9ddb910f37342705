#pragma once

#include <string>
#include <vector>

#include "jaco/graph.hpp"

namespace jaco {

// n-independent in-degree and unclipped reach 2i - d^-(i) of vertex i
struct DegreeRow {
    int in_degree;
    int reach;
};

// directed J_n(1): arc (i, j), i < j, present iff j <= 2i - d^-(v_i)
class JacoGraph {
  public:
    static JacoGraph build(int n);  // 1 <= n <= 64
    static std::vector<DegreeRow> degree_table(int max_i);

    int order() const { return n_; }
    const std::vector<Edge>& arcs() const { return arcs_; }
    int in_degree(int i) const;
    int out_degree(int i) const;  // clipped to n
    const SimpleGraph& underlying() const { return underlying_; }

    // smallest-indexed vertex of maximum underlying degree; the vertices above
    // it must induce a complete graph, checked at build
    int prime_jaconian() const { return prime_; }
    VertexSet hope_vertices() const;   // empty for n = 1
    InducedGraph hope_graph() const;   // rejects n = 1

    std::string to_dot(bool directed) const;
    std::string to_json() const;

  private:
    JacoGraph(int n, std::vector<Edge> arcs, std::vector<int> in_deg,
              std::vector<int> out_deg, SimpleGraph underlying, int prime);
    int n_;
    std::vector<Edge> arcs_;
    std::vector<int> in_deg_;
    std::vector<int> out_deg_;
    SimpleGraph underlying_;
    int prime_;
};

}  // namespace jaco
