#include "jaco/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>
#include <vector>

namespace jaco {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    const char* who;
    explicit Deadline(const OracleBudget& b, const char* name)
        : end(Clock::now() +
              std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(b.time_ceiling_seconds))),
          who(name) {}
    void tick() const {
        if (Clock::now() > end)
            throw BudgetExceeded(std::string(who) + ": time ceiling exceeded");
    }
};

void require_order(const SimpleGraph& g, int limit, const char* who) {
    if (g.order() > limit)
        throw BudgetExceeded(std::string(who) + ": order " + std::to_string(g.order()) +
                             " exceeds budget " + std::to_string(limit));
}

// ascending k-index combinations of 0..n-1; f returning true stops the scan
template <typename F>
bool each_combination(int n, int k, const Deadline& dl, F&& f) {
    if (k > n) return false;
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    long long steps = 0;
    while (true) {
        if ((++steps & 0xfff) == 0) dl.tick();
        if (f(idx)) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
}

int mis_branch(const SimpleGraph& g, VertexSet candidates, int have, int& best,
               const Deadline& dl) {
    dl.tick();
    if (have + vs_count(candidates) <= best) return best;
    if (candidates == 0) {
        best = std::max(best, have);
        return best;
    }
    int v = vs_lowest(candidates);
    mis_branch(g, candidates & ~g.closed_neighbors(v), have + 1, best, dl);
    mis_branch(g, candidates & ~vs_bit(v), have, best, dl);
    return best;
}

bool color_branch(const SimpleGraph& g, const std::vector<int>& order, size_t at,
                  std::vector<int>& color, int limit, int used, const Deadline& dl) {
    dl.tick();
    if (at == order.size()) return true;
    int v = order[at];
    int cap = std::min(limit, used + 1);  // fresh colors are interchangeable
    for (int c = 1; c <= cap; ++c) {
        bool clash = false;
        for (int nb : vs_members(g.neighbors(v)))
            if (color[static_cast<size_t>(nb)] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        color[static_cast<size_t>(v)] = c;
        if (color_branch(g, order, at + 1, color, limit, std::max(used, c), dl)) return true;
        color[static_cast<size_t>(v)] = 0;
    }
    return false;
}

SimpleGraph complement(const SimpleGraph& g) {
    return SimpleGraph::from_edges(g.order(), g.absent_pairs());
}

}  // namespace

int alpha_oracle(const SimpleGraph& g, const OracleBudget& budget) {
    require_order(g, budget.max_independence, "alpha oracle");
    Deadline dl(budget, "alpha oracle");
    int best = 0;
    return mis_branch(g, g.vertices(), 0, best, dl);
}

int chi_oracle(const SimpleGraph& g, const OracleBudget& budget) {
    require_order(g, budget.max_chromatic, "chi oracle");
    Deadline dl(budget, "chi oracle");
    int clique = 0;
    mis_branch(complement(g), g.vertices(), 0, clique, dl);
    std::vector<int> order(static_cast<size_t>(g.order()));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int c = std::max(clique, 1); c <= g.order(); ++c) {
        std::vector<int> color(static_cast<size_t>(g.order()) + 1, 0);
        if (color_branch(g, order, 0, color, c, 0, dl)) return c;
    }
    return g.order();  // unreachable, n colors always suffice
}

int gamma_oracle(const SimpleGraph& g, const OracleBudget& budget) {
    require_order(g, budget.max_domination, "gamma oracle");
    Deadline dl(budget, "gamma oracle");
    int n = g.order();
    for (int k = 1; k <= n; ++k) {
        bool found = each_combination(n, k, dl, [&](const std::vector<int>& idx) {
            VertexSet s = 0;
            for (int i : idx) s |= vs_bit(i + 1);
            return dominates(g, s);
        });
        if (found) return k;
    }
    return n;  // unreachable, V dominates
}

MurtageResult murtage_oracle(const SimpleGraph& g, const OracleBudget& budget) {
    require_order(g, budget.max_alteration, "murtage oracle");
    if (!g.is_connected()) throw std::invalid_argument("murtage oracle needs a connected graph");
    Deadline dl(budget, "murtage oracle");
    int base = gamma_oracle(g, budget);
    if (base == 1) return {0, "oracle", {}};
    std::vector<Edge> absent = g.absent_pairs();
    for (int k = 1; k <= static_cast<int>(absent.size()); ++k) {
        MurtageResult hit;
        bool found = each_combination(static_cast<int>(absent.size()), k, dl,
                                      [&](const std::vector<int>& idx) {
                                          SimpleGraph h = g;
                                          for (int i : idx)
                                              h = h.with_edge(absent[static_cast<size_t>(i)].first,
                                                              absent[static_cast<size_t>(i)].second);
                                          if (gamma_oracle(h, budget) >= base) return false;
                                          hit.value = k;
                                          hit.method = "oracle";
                                          for (int i : idx)
                                              hit.witness_edges.push_back(absent[static_cast<size_t>(i)]);
                                          return true;
                                      });
        if (found) return hit;
    }
    throw std::logic_error("murtage oracle: no edge set reduced gamma");
}

BondageResult bondage_oracle(const SimpleGraph& g, const OracleBudget& budget) {
    require_order(g, budget.max_alteration, "bondage oracle");
    std::vector<Edge> present = g.edges();
    if (present.empty()) throw std::invalid_argument("bondage oracle needs an edge");
    Deadline dl(budget, "bondage oracle");
    int base = gamma_oracle(g, budget);
    for (int k = 1; k <= static_cast<int>(present.size()); ++k) {
        BondageResult hit;
        bool found = each_combination(static_cast<int>(present.size()), k, dl,
                                      [&](const std::vector<int>& idx) {
                                          SimpleGraph h = g;
                                          for (int i : idx)
                                              h = h.without_edge(present[static_cast<size_t>(i)].first,
                                                                 present[static_cast<size_t>(i)].second);
                                          if (gamma_oracle(h, budget) <= base) return false;
                                          hit.value = k;
                                          for (int i : idx)
                                              hit.witness_edges.push_back(present[static_cast<size_t>(i)]);
                                          return true;
                                      });
        if (found) return hit;
    }
    throw std::logic_error("bondage oracle: gamma never increased");
}

GammaMinusResult gamma_minus_oracle(const SimpleGraph& g, const OracleBudget& budget) {
    require_order(g, budget.max_alteration, "gamma-minus oracle");
    Deadline dl(budget, "gamma-minus oracle");
    int base = gamma_oracle(g, budget);
    if (base == 1) return {0, false, 0};
    int n = g.order();
    for (int k = 1; k < n; ++k) {
        GammaMinusResult hit;
        bool found = each_combination(n, k, dl, [&](const std::vector<int>& idx) {
            VertexSet drop = 0;
            for (int i : idx) drop |= vs_bit(i + 1);
            auto rest = g.without_vertices(drop);
            if (gamma_oracle(rest.graph, budget) >= base) return false;
            hit.value = k;
            hit.defined = true;
            hit.witness = drop;
            return true;
        });
        if (found) return hit;
    }
    throw std::logic_error("gamma-minus oracle: gamma never decreased");
}

}  // namespace jaco
