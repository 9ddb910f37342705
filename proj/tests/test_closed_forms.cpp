#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "jaco/closed_forms.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/oracles.hpp"

using namespace jaco;

TEST_CASE("independence trace walks the greedy chain") {
    CHECK(independence_trace(JacoGraph::build(1)).chosen == std::vector<int>{1});
    CHECK(independence_trace(JacoGraph::build(19)).chosen ==
          std::vector<int>{1, 3, 6, 11, 19});
    CHECK(independence_trace(JacoGraph::build(32)).chosen ==
          std::vector<int>{1, 3, 6, 11, 19, 32});
    CHECK(independence_trace(JacoGraph::build(31)).chosen ==
          std::vector<int>{1, 3, 6, 11, 19});

    const std::vector<int> alpha13 = {1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4};
    for (int n = 1; n <= 13; ++n) {
        CAPTURE(n);
        IndependenceTrace t = independence_trace(JacoGraph::build(n));
        CHECK(t.alpha == alpha13[n - 1]);
        CHECK(t.alpha == static_cast<int>(t.chosen.size()));
    }
    CHECK(independence_trace(JacoGraph::build(30)).alpha == 5);
}

TEST_CASE("trace picks an actual maximum independent set") {
    for (int n = 1; n <= 25; ++n) {
        CAPTURE(n);
        JacoGraph j = JacoGraph::build(n);
        IndependenceTrace t = independence_trace(j);
        CHECK(is_independent(j.underlying(), vs_from(t.chosen)));
        CHECK(t.alpha == alpha_oracle(j.underlying()));
    }
}

TEST_CASE("covering number complements the trace") {
    for (int n = 1; n <= 20; ++n) {
        JacoGraph j = JacoGraph::build(n);
        CHECK(covering_number(j) == n - independence_trace(j).alpha);
    }
}

TEST_CASE("chromatic closed form") {
    const std::vector<int> chi13 = {1, 2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6};
    for (int n = 1; n <= 13; ++n) {
        CAPTURE(n);
        CHECK(chromatic_closed_form(JacoGraph::build(n)) == chi13[n - 1]);
    }
    CHECK(chromatic_closed_form(JacoGraph::build(18)) == 8);
    for (int n = 1; n <= 14; ++n) {
        CAPTURE(n);
        JacoGraph j = JacoGraph::build(n);
        CHECK(chromatic_closed_form(j) == chi_oracle(j.underlying()));
    }
}

TEST_CASE("gamma recursion") {
    const std::vector<int> gamma13 = {1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3};
    for (int n = 1; n <= 13; ++n) {
        CAPTURE(n);
        CHECK(gamma_recursion(n) == gamma13[n - 1]);
    }
    for (int n = 14; n <= 20; ++n) CHECK(gamma_recursion(n) == 3);
    CHECK(gamma_recursion(30) == 3);
    CHECK(gamma_recursion(64) == 4);
    CHECK_THROWS_AS(gamma_recursion(0), std::invalid_argument);

    for (int n = 1; n <= 25; ++n) {
        CAPTURE(n);
        CHECK(gamma_recursion(n) == gamma_oracle(JacoGraph::build(n).underlying()));
    }
}

TEST_CASE("murtage stays within its bound") {
    for (int n : {1, 5, 9, 12}) {
        CAPTURE(n);
        MurtageBoundCheck c = murtage_bound_check(n);
        CHECK(c.within);
        CHECK(c.value >= 0);
        CHECK(c.value <= 3);
    }
}
