#include <stdexcept>

#include "doctest.h"
#include "jaco/graph.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/oracles.hpp"

using namespace jaco;

namespace {

SimpleGraph star4() { return SimpleGraph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}); }

// relabel through a fixed permutation, old label v -> perm[v-1]
SimpleGraph relabeled(const SimpleGraph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = perm[u - 1], b = perm[v - 1];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return SimpleGraph::from_edges(g.order(), edges);
}

}  // namespace

TEST_CASE("independence number") {
    CHECK(alpha_oracle(SimpleGraph::path(4)) == 2);
    CHECK(alpha_oracle(SimpleGraph::path(7)) == 4);
    CHECK(alpha_oracle(SimpleGraph::cycle(5)) == 2);
    CHECK(alpha_oracle(SimpleGraph::cycle(6)) == 3);
    CHECK(alpha_oracle(SimpleGraph::complete(5)) == 1);
    CHECK(alpha_oracle(star4()) == 3);
    CHECK(alpha_oracle(JacoGraph::build(10).underlying()) == 3);
}

TEST_CASE("chromatic number") {
    CHECK(chi_oracle(SimpleGraph::path(4)) == 2);
    CHECK(chi_oracle(SimpleGraph::cycle(5)) == 3);
    CHECK(chi_oracle(SimpleGraph::cycle(6)) == 2);
    CHECK(chi_oracle(SimpleGraph::complete(4)) == 4);
    CHECK(chi_oracle(SimpleGraph::complete(1)) == 1);
    CHECK(chi_oracle(JacoGraph::build(6).underlying()) == 3);
}

TEST_CASE("domination number") {
    CHECK(gamma_oracle(SimpleGraph::path(4)) == 2);
    CHECK(gamma_oracle(SimpleGraph::path(6)) == 2);
    CHECK(gamma_oracle(SimpleGraph::path(7)) == 3);
    CHECK(gamma_oracle(SimpleGraph::cycle(4)) == 2);
    CHECK(gamma_oracle(SimpleGraph::cycle(9)) == 3);
    CHECK(gamma_oracle(SimpleGraph::complete(5)) == 1);
    CHECK(gamma_oracle(JacoGraph::build(12).underlying()) == 3);
}

TEST_CASE("murtage") {
    auto m = [](const SimpleGraph& g) { return murtage_oracle(g).value; };
    CHECK(m(SimpleGraph::path(4)) == 1);
    CHECK(m(SimpleGraph::path(5)) == 2);
    CHECK(m(SimpleGraph::path(6)) == 3);
    CHECK(m(SimpleGraph::path(7)) == 1);
    CHECK(m(SimpleGraph::path(8)) == 2);
    CHECK(m(SimpleGraph::cycle(4)) == 1);
    CHECK(m(SimpleGraph::cycle(5)) == 2);
    CHECK(m(SimpleGraph::cycle(6)) == 3);
    CHECK(m(SimpleGraph::cycle(7)) == 1);
    CHECK(m(SimpleGraph::cycle(8)) == 2);
    CHECK(m(SimpleGraph::cycle(9)) == 3);

    MurtageResult one = murtage_oracle(SimpleGraph::complete(4));
    CHECK(one.value == 0);
    CHECK(one.method == "oracle");
    CHECK(one.witness_edges.empty());
    CHECK(murtage_oracle(star4()).value == 0);

    MurtageResult p4 = murtage_oracle(SimpleGraph::path(4));
    REQUIRE(p4.witness_edges.size() == 1);
    SimpleGraph joined = SimpleGraph::path(4).with_edge(p4.witness_edges[0].first,
                                                        p4.witness_edges[0].second);
    CHECK(gamma_oracle(joined) < 2);

    CHECK_THROWS_AS(murtage_oracle(SimpleGraph::from_edges(4, {{1, 2}, {3, 4}})),
                    std::invalid_argument);
}

TEST_CASE("bondage") {
    CHECK(bondage_oracle(SimpleGraph::cycle(4)).value == 3);
    CHECK(bondage_oracle(SimpleGraph::cycle(6)).value == 2);
    CHECK(bondage_oracle(SimpleGraph::complete(2)).value == 1);
    CHECK(bondage_oracle(star4()).value == 1);
    CHECK(bondage_oracle(SimpleGraph::path(4)).value == 2);

    BondageResult b = bondage_oracle(SimpleGraph::cycle(6));
    REQUIRE(b.witness_edges.size() == 2);
    SimpleGraph cut = SimpleGraph::cycle(6)
                          .without_edge(b.witness_edges[0].first, b.witness_edges[0].second)
                          .without_edge(b.witness_edges[1].first, b.witness_edges[1].second);
    CHECK(gamma_oracle(cut) > 2);

    CHECK_THROWS_AS(bondage_oracle(SimpleGraph::empty(3)), std::invalid_argument);
}

TEST_CASE("gamma-minus") {
    GammaMinusResult k = gamma_minus_oracle(SimpleGraph::complete(4));
    CHECK(k.value == 0);
    CHECK_FALSE(k.defined);

    GammaMinusResult p = gamma_minus_oracle(SimpleGraph::path(4));
    CHECK(p.value == 1);
    CHECK(p.defined);
    CHECK(vs_count(p.witness) == 1);
    CHECK(gamma_minus_oracle(SimpleGraph::cycle(6)).value == 3);
}

TEST_CASE("oracles ignore labels") {
    std::vector<int> perm = {4, 1, 6, 2, 5, 3};
    SimpleGraph c = SimpleGraph::cycle(6);
    SimpleGraph r = relabeled(c, perm);
    CHECK(alpha_oracle(r) == alpha_oracle(c));
    CHECK(chi_oracle(r) == chi_oracle(c));
    CHECK(gamma_oracle(r) == gamma_oracle(c));
    CHECK(murtage_oracle(r).value == murtage_oracle(c).value);
    CHECK(bondage_oracle(r).value == bondage_oracle(c).value);
}

TEST_CASE("order budgets") {
    SimpleGraph big = SimpleGraph::path(31);
    CHECK_THROWS_AS(alpha_oracle(big), BudgetExceeded);
    CHECK_THROWS_AS(gamma_oracle(big), BudgetExceeded);
    CHECK_THROWS_AS(chi_oracle(SimpleGraph::path(19)), BudgetExceeded);
    CHECK_THROWS_AS(murtage_oracle(SimpleGraph::path(14)), BudgetExceeded);
    CHECK_THROWS_AS(bondage_oracle(SimpleGraph::path(14)), BudgetExceeded);
    CHECK_THROWS_AS(gamma_minus_oracle(SimpleGraph::path(14)), BudgetExceeded);

    OracleBudget wide;
    wide.max_independence = 40;
    CHECK(alpha_oracle(SimpleGraph::path(31), wide) == 16);
}

TEST_CASE("time ceiling") {
    OracleBudget instant;
    instant.time_ceiling_seconds = 0.0;
    CHECK_THROWS_AS(gamma_oracle(SimpleGraph::path(25), instant), BudgetExceeded);
}
