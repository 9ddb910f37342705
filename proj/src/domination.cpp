#include "jaco/domination.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jaco {

namespace {

int greedy_upper_bound(const SimpleGraph& g) {
    VertexSet covered = 0;
    int picks = 0;
    while (covered != g.vertices()) {
        int best = 0, gain = -1;
        for (int v = 1; v <= g.order(); ++v) {
            int add = vs_count(g.closed_neighbors(v) & ~covered);
            if (add > gain) {
                gain = add;
                best = v;
            }
        }
        covered |= g.closed_neighbors(best);
        ++picks;
    }
    return picks;
}

void gamma_branch(const SimpleGraph& g, VertexSet covered, int chosen, int& best) {
    if (covered == g.vertices()) {
        best = std::min(best, chosen);
        return;
    }
    if (chosen + 1 >= best) return;
    int pivot = 0, fewest = 65;
    for (int v : vs_members(g.vertices() & ~covered)) {
        int options = vs_count(g.closed_neighbors(v));
        if (options < fewest) {
            fewest = options;
            pivot = v;
        }
    }
    for (int w : vs_members(g.closed_neighbors(pivot)))
        gamma_branch(g, covered | g.closed_neighbors(w), chosen + 1, best);
}

// private neighbors of each member: outside x, adjacent to that member only
std::vector<VertexSet> private_sets(const SimpleGraph& g, VertexSet x) {
    std::vector<int> members = vs_members(x);
    std::vector<VertexSet> out;
    out.reserve(members.size());
    for (int v : members) {
        VertexSet priv = 0;
        for (int u : vs_members(g.neighbors(v) & ~x)) {
            if ((g.neighbors(u) & x) == vs_bit(v)) priv |= vs_bit(u);
        }
        out.push_back(priv);
    }
    return out;
}

void collect_sets(const SimpleGraph& g, int k, int first, VertexSet acc,
                  std::vector<VertexSet>& out) {
    if (k == 0) {
        if (dominates(g, acc)) out.push_back(acc);
        return;
    }
    for (int v = first; v <= g.order() - k + 1; ++v)
        collect_sets(g, k - 1, v + 1, acc | vs_bit(v), out);
}

bool alteration_search(int pool, int k, int first, std::vector<int>& picked,
                       const std::function<bool(const std::vector<int>&)>& test) {
    if (k == 0) return test(picked);
    for (int i = first; i <= pool - k; ++i) {
        picked.push_back(i);
        if (alteration_search(pool, k - 1, i + 1, picked, test)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

int gamma(const SimpleGraph& g) {
    int best = greedy_upper_bound(g);
    gamma_branch(g, 0, 0, best);
    return best;
}

std::vector<VertexSet> all_gamma_sets(const SimpleGraph& g) {
    std::vector<VertexSet> out;
    collect_sets(g, gamma(g), 1, 0, out);
    return out;
}

DomAnalysis analyze_gamma_set(const SimpleGraph& g, VertexSet x) {
    if (!dominates(g, x)) throw std::invalid_argument("set does not dominate");
    if (vs_count(x) != gamma(g)) throw std::invalid_argument("set is not minimum");

    std::vector<int> members = vs_members(x);
    std::vector<VertexSet> priv = private_sets(g, x);

    DomAnalysis a;
    a.gamma_set = x;
    int fewest = 65;
    for (size_t i = 0; i < members.size(); ++i) fewest = std::min(fewest, vs_count(priv[i]));
    a.theta = 1 + fewest;
    for (size_t i = 0; i < members.size(); ++i)
        if (vs_count(priv[i]) == fewest) {
            a.designated = members[i];
            break;
        }

    std::vector<VertexSet> cell(members.size());
    for (size_t i = 0; i < members.size(); ++i) cell[i] = vs_bit(members[i]) | priv[i];
    for (int u : vs_members(g.vertices() & ~x)) {
        VertexSet doms = g.neighbors(u) & x;
        if (vs_count(doms) < 2) continue;  // private, already placed
        size_t pick = members.size();
        int pick_priv = -1, pick_label = -1;
        for (size_t i = 0; i < members.size(); ++i) {
            if (members[i] == a.designated || !vs_has(doms, members[i])) continue;
            int p = vs_count(priv[i]);
            if (p > pick_priv || (p == pick_priv && members[i] > pick_label)) {
                pick = i;
                pick_priv = p;
                pick_label = members[i];
            }
        }
        if (pick == members.size())
            throw std::logic_error("shared vertex with no non-designated dominator");
        cell[pick] |= vs_bit(u);
    }

    std::vector<size_t> order(members.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t l, size_t r) {
        int sl = vs_count(cell[l]), sr = vs_count(cell[r]);
        return sl != sr ? sl < sr : members[l] < members[r];
    });
    int total = 0;
    for (size_t i : order) {
        a.partition.push_back(vs_members(cell[i]));
        a.dom_sequence.push_back(vs_count(cell[i]));
        total += vs_count(cell[i]);
    }
    if (total != g.order()) throw std::logic_error("partition cells do not sum to the order");

    for (int v : members) {
        if (v == a.designated) continue;
        auto d = g.distance(a.designated, v);
        if (!d) throw std::invalid_argument("distance undefined within the gamma-set");
        a.distance_score += *d;
    }
    return a;
}

std::vector<DomAnalysis> compact_gamma_sets(const SimpleGraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("compact gamma-sets need a connected graph");
    std::vector<DomAnalysis> analyses;
    for (VertexSet x : all_gamma_sets(g)) analyses.push_back(analyze_gamma_set(g, x));
    int theta = 65;
    for (const auto& a : analyses) theta = std::min(theta, a.theta);
    std::erase_if(analyses, [&](const DomAnalysis& a) { return a.theta != theta; });
    int score = analyses.front().distance_score;
    for (const auto& a : analyses) score = std::min(score, a.distance_score);
    std::erase_if(analyses, [&](const DomAnalysis& a) { return a.distance_score != score; });
    return analyses;
}

MurtageResult murtage_via_theorem(const SimpleGraph& g) {
    if (gamma(g) == 1) return {0, "theorem", {}};
    DomAnalysis a = compact_gamma_sets(g).front();
    bool adjacent = (g.neighbors(a.designated) & a.gamma_set) != 0;

    MurtageResult r;
    r.method = "theorem";
    r.value = adjacent ? a.theta - 1 : a.theta;

    // joining the designated cell to another member makes X minus designated dominate
    int target = 0;
    for (int v : vs_members(a.gamma_set))
        if (v != a.designated) {
            target = v;
            break;
        }
    for (const auto& cell : a.partition) {
        if (std::find(cell.begin(), cell.end(), a.designated) == cell.end()) continue;
        for (int u : cell) {
            if (u == a.designated && adjacent) continue;
            r.witness_edges.push_back({std::min(u, target), std::max(u, target)});
        }
        break;
    }
    std::sort(r.witness_edges.begin(), r.witness_edges.end());
    return r;
}

GammaMinusResult gamma_minus(const SimpleGraph& g) {
    int base = gamma(g);
    if (base == 1) return {0, false, 0};
    int n = g.order();
    for (int k = 1; k < n; ++k) {
        GammaMinusResult hit;
        std::vector<int> picked;
        bool found = alteration_search(n, k, 0, picked, [&](const std::vector<int>& idx) {
            VertexSet drop = 0;
            for (int i : idx) drop |= vs_bit(i + 1);
            if (gamma(g.without_vertices(drop).graph) >= base) return false;
            hit.value = k;
            hit.defined = true;
            hit.witness = drop;
            return true;
        });
        if (found) return hit;
    }
    throw std::logic_error("gamma never decreased under vertex removal");
}

BondageResult bondage(const SimpleGraph& g) {
    std::vector<Edge> present = g.edges();
    if (present.empty()) throw std::invalid_argument("bondage needs an edge");
    int base = gamma(g);
    for (int k = 1; k <= static_cast<int>(present.size()); ++k) {
        BondageResult hit;
        std::vector<int> picked;
        bool found = alteration_search(static_cast<int>(present.size()), k, 0, picked,
                                       [&](const std::vector<int>& idx) {
                                           SimpleGraph h = g;
                                           for (int i : idx)
                                               h = h.without_edge(present[static_cast<size_t>(i)].first,
                                                                  present[static_cast<size_t>(i)].second);
                                           if (gamma(h) <= base) return false;
                                           hit.value = k;
                                           for (int i : idx)
                                               hit.witness_edges.push_back(present[static_cast<size_t>(i)]);
                                           return true;
                                       });
        if (found) return hit;
    }
    throw std::logic_error("gamma never increased under edge removal");
}

SpanningTreeReport spanning_tree_preserving(const SimpleGraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("spanning tree needs a connected graph");
    DomAnalysis a = compact_gamma_sets(g).front();

    std::vector<int> dominator;  // per cell
    for (const auto& cell : a.partition)
        for (int v : cell)
            if (vs_has(a.gamma_set, v)) dominator.push_back(v);

    std::vector<Edge> tree_edges;
    for (size_t c = 0; c < a.partition.size(); ++c)
        for (int v : a.partition[c])
            if (v != dominator[c])
                tree_edges.push_back({std::min(v, dominator[c]), std::max(v, dominator[c])});

    size_t largest = a.partition.size() - 1;
    int anchor = dominator[largest];
    std::vector<int> tree_degree(static_cast<size_t>(g.order()) + 1, 0);
    for (auto [u, v] : tree_edges) {
        ++tree_degree[static_cast<size_t>(u)];
        ++tree_degree[static_cast<size_t>(v)];
    }

    VertexSet attached = 0;
    for (int v : a.partition[largest]) attached |= vs_bit(v);
    std::vector<bool> cell_attached(a.partition.size(), false);
    cell_attached[largest] = true;

    int delta = g.max_degree();
    auto cell_of = [&](int v) {
        for (size_t c = 0; c < a.partition.size(); ++c)
            if (std::find(a.partition[c].begin(), a.partition[c].end(), v) !=
                a.partition[c].end())
                return c;
        return a.partition.size();
    };

    for (size_t joined = 1; joined < a.partition.size(); ++joined) {
        Edge pick{0, 0};
        bool have = false;
        bool want_anchor = tree_degree[static_cast<size_t>(anchor)] < delta;
        for (int pass = 0; pass < 2 && !have; ++pass) {
            for (auto [u, v] : g.edges()) {
                bool u_in = vs_has(attached, u), v_in = vs_has(attached, v);
                if (u_in == v_in) continue;
                if (want_anchor && pass == 0 && u != anchor && v != anchor) continue;
                pick = {u, v};
                have = true;
                break;
            }
        }
        if (!have) throw std::logic_error("cross edge missing, graph not connected");
        tree_edges.push_back(pick);
        ++tree_degree[static_cast<size_t>(pick.first)];
        ++tree_degree[static_cast<size_t>(pick.second)];
        int fresh = vs_has(attached, pick.first) ? pick.second : pick.first;
        size_t c = cell_of(fresh);
        cell_attached[c] = true;
        for (int v : a.partition[c]) attached |= vs_bit(v);
    }

    SpanningTreeReport r{SimpleGraph::from_edges(g.order(), tree_edges)};
    r.delta_graph = delta;
    r.delta_tree = r.tree.max_degree();
    r.gamma_graph = static_cast<int>(a.partition.size());
    r.gamma_tree = gamma(r.tree);
    r.murtage_graph = murtage_via_theorem(g).value;
    r.murtage_tree = murtage_via_theorem(r.tree).value;
    r.preserved = r.delta_graph == r.delta_tree && r.gamma_graph == r.gamma_tree &&
                  r.murtage_graph == r.murtage_tree;
    return r;
}

bool disjoint_union_check(const std::vector<SimpleGraph>& parts, const OracleBudget& budget) {
    for (const auto& g : parts)
        if (!g.is_connected()) throw std::invalid_argument("union parts must be connected");
    SimpleGraph whole = disjoint_union(parts);

    int gamma_sum = 0;
    for (const auto& g : parts) gamma_sum += gamma_oracle(g, budget);
    if (gamma_oracle(whole, budget) != gamma_sum) return false;

    int part_murtage = 0;
    for (const auto& g : parts) part_murtage += murtage_oracle(g, budget).value;
    int component_murtage = 0;
    for (VertexSet comp : whole.components())
        component_murtage += murtage_oracle(whole.induced(comp).graph, budget).value;
    return component_murtage == part_murtage;
}

}  // namespace jaco
