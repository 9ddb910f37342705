#include "jaco/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace jaco {

IndependenceTrace independence_trace(const JacoGraph& j) {
    IndependenceTrace out;
    int cur = 1;
    out.chosen.push_back(cur);
    while (true) {
        int next = cur + j.out_degree(cur) + 1;
        if (next > j.order()) break;
        out.chosen.push_back(next);
        cur = next;
    }
    out.alpha = static_cast<int>(out.chosen.size());
    return out;
}

int covering_number(const JacoGraph& j) { return j.order() - independence_trace(j).alpha; }

int chromatic_closed_form(const JacoGraph& j) {
    int n = j.order();
    if (n == 1) return 1;
    int i = j.prime_jaconian();
    return (n - i) + (j.underlying().has_edge(i, n) ? 1 : 0);
}

int gamma_recursion(int n) {
    if (n < 1) throw std::invalid_argument("gamma recursion needs n >= 1");
    if (n <= 3) return 1;
    auto table = JacoGraph::degree_table(n);
    int steps = 0;
    int cur = n;
    while (cur > 3) {
        int d_last = table[cur - 1].in_degree;
        int mid = cur - d_last;
        int next = cur - d_last - table[mid - 1].in_degree - 1;
        if (next < 1)
            throw std::runtime_error("gamma recursion index fell below 1 at n = " +
                                     std::to_string(cur));
        ++steps;
        cur = next;
    }
    return steps + 1;
}

MurtageBoundCheck murtage_bound_check(int n, const OracleBudget& budget) {
    int m = murtage_oracle(JacoGraph::build(n).underlying(), budget).value;
    return {m, 0 <= m && m <= 3};
}

}  // namespace jaco
