#include "jaco/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace jaco {

int vs_count(VertexSet s) { return std::popcount(s); }

int vs_lowest(VertexSet s) {
    if (s == 0) throw std::invalid_argument("vs_lowest on empty set");
    return std::countr_zero(s) + 1;
}

std::vector<int> vs_members(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s) + 1;
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

VertexSet vs_from(const std::vector<int>& members) {
    VertexSet s = 0;
    for (int v : members) {
        if (v < 1 || v > 64) throw std::invalid_argument("vertex label out of range");
        s |= vs_bit(v);
    }
    return s;
}

std::string vs_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : vs_members(s)) {
        if (!first) out += ", ";
        out += "v" + std::to_string(v);
        first = false;
    }
    return out + "}";
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 1 || n > 64) throw std::invalid_argument("order must be in 1..64");
}

void SimpleGraph::check(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex label out of range");
}

SimpleGraph SimpleGraph::empty(int n) { return SimpleGraph(n); }

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
        g.check(u);
        g.check(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.adj_[u - 1] |= vs_bit(v);
        g.adj_[v - 1] |= vs_bit(u);
    }
    return g;
}

SimpleGraph SimpleGraph::path(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    return from_edges(n, e);
}

SimpleGraph SimpleGraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    e.push_back({1, n});
    return from_edges(n, e);
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
    return from_edges(n, e);
}

int SimpleGraph::edge_count() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += vs_count(row);
    return twice / 2;
}

VertexSet SimpleGraph::vertices() const {
    return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check(u);
    check(v);
    return vs_has(adj_[u - 1], v);
}

int SimpleGraph::degree(int v) const { return vs_count(neighbors(v)); }

int SimpleGraph::max_degree() const {
    int best = 0;
    for (VertexSet row : adj_) best = std::max(best, vs_count(row));
    return best;
}

VertexSet SimpleGraph::closed_neighborhood(VertexSet s) const {
    VertexSet out = s;
    for (int v : vs_members(s)) out |= adj_[v - 1];
    return out;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v : vs_members(adj_[u - 1]))
            if (u < v) out.push_back({u, v});
    return out;
}

std::vector<Edge> SimpleGraph::absent_pairs() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (!vs_has(adj_[u - 1], v)) out.push_back({u, v});
    return out;
}

std::optional<int> SimpleGraph::distance(int u, int v) const {
    check(u);
    check(v);
    if (u == v) return 0;
    std::vector<int> dist(static_cast<size_t>(n_) + 1, -1);
    dist[u] = 0;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        for (int nb : vs_members(adj_[cur - 1])) {
            if (dist[nb] >= 0) continue;
            dist[nb] = dist[cur] + 1;
            if (nb == v) return dist[nb];
            q.push(nb);
        }
    }
    return std::nullopt;
}

bool SimpleGraph::is_connected() const { return components().size() == 1; }

std::vector<VertexSet> SimpleGraph::components() const {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int v = 1; v <= n_; ++v) {
        if (vs_has(seen, v)) continue;
        VertexSet comp = vs_bit(v);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (int u : vs_members(frontier)) next |= adj_[u - 1];
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

SimpleGraph SimpleGraph::with_edge(int u, int v) const {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (has_edge(u, v)) throw std::invalid_argument("edge already present");
    SimpleGraph g = *this;
    g.adj_[u - 1] |= vs_bit(v);
    g.adj_[v - 1] |= vs_bit(u);
    return g;
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    SimpleGraph g = *this;
    g.adj_[u - 1] &= ~vs_bit(v);
    g.adj_[v - 1] &= ~vs_bit(u);
    return g;
}

InducedGraph SimpleGraph::induced(VertexSet keep) const {
    keep &= vertices();
    if (keep == 0) throw std::invalid_argument("induced subgraph must keep a vertex");
    std::vector<int> labels = vs_members(keep);
    std::vector<int> pos(static_cast<size_t>(n_) + 1, 0);
    for (size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> e;
    for (int u : labels)
        for (int v : vs_members(adj_[u - 1] & keep))
            if (u < v) e.push_back({pos[u], pos[v]});
    return {from_edges(static_cast<int>(labels.size()), e), labels};
}

InducedGraph SimpleGraph::without_vertices(VertexSet drop) const {
    return induced(vertices() & ~drop);
}

std::string SimpleGraph::to_edge_list() const {
    std::string out = std::to_string(n_);
    for (auto [u, v] : edges())
        out += "\n" + std::to_string(u) + " " + std::to_string(v);
    return out;
}

SimpleGraph SimpleGraph::from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    if (n < 1 || n > 64) throw std::invalid_argument("edge list: order must be in 1..64");
    std::vector<Edge> e;
    int u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v))
            throw std::invalid_argument(in.eof() ? "edge list: dangling endpoint"
                                                 : "edge list: non-numeric token");
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge list: endpoint out of range");
        if (u == v) throw std::invalid_argument("edge list: self-loop rejected");
        e.push_back({u, v});
    }
    if (!in.eof()) throw std::invalid_argument("edge list: non-numeric token");
    return from_edges(n, e);
}

std::string SimpleGraph::to_dot() const {
    std::string out = "graph {\n";
    for (int v = 1; v <= n_; ++v) out += "  v" + std::to_string(v) + ";\n";
    for (auto [u, v] : edges())
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    return out + "}\n";
}

SimpleGraph disjoint_union(const std::vector<SimpleGraph>& parts) {
    if (parts.empty()) throw std::invalid_argument("union of nothing");
    int total = 0;
    for (const auto& g : parts) total += g.order();
    if (total > 64) throw std::invalid_argument("union exceeds 64 vertices");
    std::vector<Edge> e;
    int base = 0;
    for (const auto& g : parts) {
        for (auto [u, v] : g.edges()) e.push_back({base + u, base + v});
        base += g.order();
    }
    return SimpleGraph::from_edges(total, e);
}

bool dominates(const SimpleGraph& g, VertexSet s) {
    return g.closed_neighborhood(s) == g.vertices();
}

bool is_independent(const SimpleGraph& g, VertexSet s) {
    for (int v : vs_members(s))
        if (g.neighbors(v) & s) return false;
    return true;
}

}  // namespace jaco
