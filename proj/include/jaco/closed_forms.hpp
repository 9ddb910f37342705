#pragma once

#include <vector>

#include "jaco/jaco_graph.hpp"
#include "jaco/oracles.hpp"

namespace jaco {

// greedy recursion from v_1, next index m + d+(v_m) + 1
struct IndependenceTrace {
    std::vector<int> chosen;
    int alpha = 0;
};

IndependenceTrace independence_trace(const JacoGraph& j);
int covering_number(const JacoGraph& j);  // n - alpha

// (n - i) + 1 if edge v_i v_n exists else n - i, i the prime Jaconian index; 1 for n = 1
int chromatic_closed_form(const JacoGraph& j);

// base 1 for n <= 3, else recurse on n - d^-(v_n) - d^-(v_{n - d^-(v_n)}) - 1
int gamma_recursion(int n);

struct MurtageBoundCheck {
    int value = 0;
    bool within = false;  // 0 <= value <= 3
};

MurtageBoundCheck murtage_bound_check(int n, const OracleBudget& budget = {});

}  // namespace jaco
