#include "jaco/jaco_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace jaco {

std::vector<DegreeRow> JacoGraph::degree_table(int max_i) {
    if (max_i < 1) throw std::invalid_argument("degree table needs max_i >= 1");
    std::vector<DegreeRow> rows;
    rows.reserve(static_cast<size_t>(max_i));
    for (int i = 1; i <= max_i; ++i) {
        int d = 0;
        for (int j = 1; j < i; ++j)
            if (rows[j - 1].reach >= i) ++d;
        rows.push_back({d, 2 * i - d});
    }
    return rows;
}

JacoGraph::JacoGraph(int n, std::vector<Edge> arcs, std::vector<int> in_deg,
                     std::vector<int> out_deg, SimpleGraph underlying, int prime)
    : n_(n),
      arcs_(std::move(arcs)),
      in_deg_(std::move(in_deg)),
      out_deg_(std::move(out_deg)),
      underlying_(std::move(underlying)),
      prime_(prime) {}

JacoGraph JacoGraph::build(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("order must be in 1..64");
    auto table = degree_table(n);
    std::vector<Edge> arcs;
    std::vector<int> in_deg(static_cast<size_t>(n)), out_deg(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        in_deg[i - 1] = table[i - 1].in_degree;
        int hi = std::min(n, table[i - 1].reach);
        out_deg[i - 1] = std::max(0, hi - i);
        for (int j = i + 1; j <= hi; ++j) arcs.push_back({i, j});
    }
    SimpleGraph underlying = SimpleGraph::from_edges(n, arcs);

    int prime = 1;
    for (int v = 2; v <= n; ++v)
        if (underlying.degree(v) > underlying.degree(prime)) prime = v;
    for (int u = prime + 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!underlying.has_edge(u, v))
                throw std::logic_error(
                    "vertices above the prime Jaconian vertex v" + std::to_string(prime) +
                    " do not induce a complete graph: edge v" + std::to_string(u) + "v" +
                    std::to_string(v) + " missing in J_" + std::to_string(n));

    return JacoGraph(n, std::move(arcs), std::move(in_deg), std::move(out_deg),
                     std::move(underlying), prime);
}

int JacoGraph::in_degree(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("vertex label out of range");
    return in_deg_[i - 1];
}

int JacoGraph::out_degree(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("vertex label out of range");
    return out_deg_[i - 1];
}

VertexSet JacoGraph::hope_vertices() const {
    VertexSet out = 0;
    for (int v = prime_ + 1; v <= n_; ++v) out |= vs_bit(v);
    return out;
}

InducedGraph JacoGraph::hope_graph() const {
    VertexSet hope = hope_vertices();
    if (hope == 0)
        throw std::invalid_argument("hope graph of J_" + std::to_string(n_) + " is empty");
    return underlying_.induced(hope);
}

std::string JacoGraph::to_dot(bool directed) const {
    if (!directed) return underlying_.to_dot();
    std::string out = "digraph {\n";
    for (int v = 1; v <= n_; ++v) out += "  v" + std::to_string(v) + ";\n";
    for (auto [u, v] : arcs_)
        out += "  v" + std::to_string(u) + " -> v" + std::to_string(v) + ";\n";
    return out + "}\n";
}

std::string JacoGraph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto& arr = j["arcs"] = nlohmann::json::array();
    for (auto [u, v] : arcs_) arr.push_back({u, v});
    j["in_degree"] = in_deg_;
    j["out_degree"] = out_deg_;
    j["prime_jaconian"] = prime_;
    return j.dump(2) + "\n";
}

}  // namespace jaco
