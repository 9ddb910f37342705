#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jaco {

// vertex labels are 1..n with n <= 64; bit i-1 of a VertexSet holds vertex i
using VertexSet = std::uint64_t;

constexpr VertexSet vs_bit(int v) { return VertexSet{1} << (v - 1); }
constexpr bool vs_has(VertexSet s, int v) { return (s >> (v - 1)) & VertexSet{1}; }
int vs_count(VertexSet s);
int vs_lowest(VertexSet s);  // smallest label, s must be nonempty
std::vector<int> vs_members(VertexSet s);
VertexSet vs_from(const std::vector<int>& members);
std::string vs_text(VertexSet s);  // "{v2, v5}"

using Edge = std::pair<int, int>;  // normalized to first < second

struct InducedGraph;

class SimpleGraph {
  public:
    static SimpleGraph empty(int n);
    static SimpleGraph from_edges(int n, const std::vector<Edge>& edges);
    static SimpleGraph path(int n);
    static SimpleGraph cycle(int n);  // n >= 3
    static SimpleGraph complete(int n);

    int order() const { return n_; }
    int edge_count() const;
    VertexSet vertices() const;  // all n bits
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;
    VertexSet neighbors(int v) const { return check(v), adj_[v - 1]; }
    VertexSet closed_neighbors(int v) const { return neighbors(v) | vs_bit(v); }
    VertexSet closed_neighborhood(VertexSet s) const;
    std::vector<int> neighbor_list(int v) const { return vs_members(neighbors(v)); }
    std::vector<Edge> edges() const;        // lexicographic
    std::vector<Edge> absent_pairs() const; // non-adjacent pairs, lexicographic

    std::optional<int> distance(int u, int v) const;  // nullopt when unreachable
    bool is_connected() const;
    std::vector<VertexSet> components() const;  // sorted by smallest member

    SimpleGraph with_edge(int u, int v) const;     // pair must be absent
    SimpleGraph without_edge(int u, int v) const;  // pair must be present
    InducedGraph induced(VertexSet keep) const;    // keep nonempty, relabeled 1..k
    InducedGraph without_vertices(VertexSet drop) const;

    std::string to_edge_list() const;  // first line n, then "i j" per line
    static SimpleGraph from_edge_list_text(const std::string& text);
    std::string to_dot() const;  // undirected graph block, vertices v1..vn

    bool operator==(const SimpleGraph& other) const = default;

  private:
    explicit SimpleGraph(int n);
    void check(int v) const;
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// relabeled subgraph plus the map back: original_label[i-1] is the host label of vertex i
struct InducedGraph {
    SimpleGraph graph;
    std::vector<int> original_label;
};

SimpleGraph disjoint_union(const std::vector<SimpleGraph>& parts);

bool dominates(const SimpleGraph& g, VertexSet s);
bool is_independent(const SimpleGraph& g, VertexSet s);

}  // namespace jaco
