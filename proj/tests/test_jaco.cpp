#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "jaco/jaco_graph.hpp"

using namespace jaco;

namespace {

// (in-degree, reach) rows for v_1..v_30
const std::vector<DegreeRow> kRows = {
    {0, 2},  {1, 3},  {1, 5},  {1, 7},  {2, 8},  {2, 10}, {3, 11}, {3, 13},
    {3, 15}, {4, 16}, {4, 18}, {4, 20}, {5, 21}, {5, 23}, {6, 24}, {6, 26},
    {6, 28}, {7, 29}, {7, 31}, {8, 32}, {8, 34}, {8, 36}, {9, 37}, {9, 39},
    {9, 41}, {10, 42}, {10, 44}, {11, 45}, {11, 47}, {11, 49}};

}  // namespace

TEST_CASE("degree table matches the hand-computed rows") {
    auto rows = JacoGraph::degree_table(30);
    REQUIRE(rows.size() == 30);
    for (size_t i = 0; i < 30; ++i) {
        CAPTURE(i);
        CHECK(rows[i].in_degree == kRows[i].in_degree);
        CHECK(rows[i].reach == kRows[i].reach);
    }
}

TEST_CASE("in-degrees do not depend on n") {
    JacoGraph small = JacoGraph::build(20);
    JacoGraph big = JacoGraph::build(40);
    for (int i = 1; i <= 20; ++i) CHECK(small.in_degree(i) == big.in_degree(i));
}

TEST_CASE("degree law holds through n = 40") {
    auto rows = JacoGraph::degree_table(40);
    for (int n = 1; n <= 40; ++n) {
        JacoGraph j = JacoGraph::build(n);
        for (int i = 1; i <= n; ++i) {
            CAPTURE(n);
            CAPTURE(i);
            int expected = rows[i - 1].reach <= n ? i : rows[i - 1].in_degree + (n - i);
            CHECK(j.underlying().degree(i) == expected);
        }
    }
}

TEST_CASE("small builds") {
    JacoGraph j4 = JacoGraph::build(4);
    CHECK(j4.underlying() == SimpleGraph::path(4));
    CHECK(j4.arcs() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});

    JacoGraph j5 = JacoGraph::build(5);
    CHECK(j5.arcs() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(j5.out_degree(3) == 2);
    CHECK(j5.out_degree(5) == 0);
    CHECK(j5.in_degree(5) == 2);

    CHECK(JacoGraph::build(1).underlying().order() == 1);
    CHECK_THROWS_AS(JacoGraph::build(0), std::invalid_argument);
    CHECK_THROWS_AS(JacoGraph::build(65), std::invalid_argument);
}

TEST_CASE("every build is connected") {
    for (int n = 1; n <= 40; ++n) CHECK(JacoGraph::build(n).underlying().is_connected());
}

TEST_CASE("prime Jaconian vertex and hope graph") {
    CHECK(JacoGraph::build(2).prime_jaconian() == 1);
    CHECK(JacoGraph::build(5).prime_jaconian() == 3);
    CHECK(JacoGraph::build(7).prime_jaconian() == 4);
    CHECK(JacoGraph::build(12).prime_jaconian() == 7);

    JacoGraph j7 = JacoGraph::build(7);
    CHECK(j7.hope_vertices() == vs_from({5, 6, 7}));
    InducedGraph hope = j7.hope_graph();
    CHECK(hope.graph == SimpleGraph::complete(3));
    CHECK(hope.original_label == std::vector<int>{5, 6, 7});

    JacoGraph j1 = JacoGraph::build(1);
    CHECK(j1.hope_vertices() == 0);
    CHECK_THROWS_AS(j1.hope_graph(), std::invalid_argument);

    // the completeness guard itself: every order up to 64 must pass it
    for (int n = 1; n <= 64; ++n) CHECK_NOTHROW(JacoGraph::build(n));
}

TEST_CASE("dot output") {
    CHECK(JacoGraph::build(4).to_dot(false) ==
          "graph {\n  v1;\n  v2;\n  v3;\n  v4;\n  v1 -- v2;\n  v2 -- v3;\n  v3 -- v4;\n}\n");
    CHECK(JacoGraph::build(3).to_dot(true) ==
          "digraph {\n  v1;\n  v2;\n  v3;\n  v1 -> v2;\n  v2 -> v3;\n}\n");
}

TEST_CASE("json output") {
    std::string j = JacoGraph::build(5).to_json();
    CHECK(j.find("\"n\": 5") != std::string::npos);
    CHECK(j.find("\"prime_jaconian\": 3") != std::string::npos);
    CHECK(j.back() == '\n');
}
