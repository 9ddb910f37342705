#pragma once

#include <stdexcept>

#include "jaco/graph.hpp"
#include "jaco/invariant_types.hpp"

namespace jaco {

// ground-truth brute force, deliberately sharing nothing with the engine
// beyond the graph substrate

struct OracleBudget {
    int max_independence = 30;
    int max_domination = 30;
    int max_chromatic = 18;
    int max_alteration = 13;  // murtage, bondage, gamma-minus
    double time_ceiling_seconds = 60.0;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int alpha_oracle(const SimpleGraph& g, const OracleBudget& budget = {});
int chi_oracle(const SimpleGraph& g, const OracleBudget& budget = {});
int gamma_oracle(const SimpleGraph& g, const OracleBudget& budget = {});
MurtageResult murtage_oracle(const SimpleGraph& g, const OracleBudget& budget = {});
BondageResult bondage_oracle(const SimpleGraph& g, const OracleBudget& budget = {});
GammaMinusResult gamma_minus_oracle(const SimpleGraph& g, const OracleBudget& budget = {});

}  // namespace jaco
