#pragma once

#include <array>
#include <string>
#include <vector>

#include "jaco/oracles.hpp"

namespace jaco {

enum class Verdict { AGREE, DISAGREE, OUT_OF_BUDGET };
std::string to_string(Verdict v);

struct VerificationRecord {
    std::string claim_id;
    std::string graph;
    std::string paper_value;  // empty when the claim states no concrete value
    std::string computed_value;
    Verdict verdict = Verdict::AGREE;
    std::string witness;  // populated on DISAGREE
};

std::string to_json_line(const VerificationRecord& r);

struct CheckOutcome {
    std::vector<VerificationRecord> records;
    // false only when our own formulas and oracles disagree
    bool internal_ok = true;
};

// checks: alpha, chi, gamma-recursion, murtage, murtage-bounds, bondage,
// gamma-minus, spanning-tree, dom-monotonicity
const std::vector<std::string>& all_check_names();
bool is_known_check(const std::string& name);
bool is_internal_check(const std::string& name);
CheckOutcome run_check(const std::string& name, int from, int to,
                       const OracleBudget& budget = {});

// hard-coded murtage sequence for n = 1..13
const std::array<int, 13>& paper_murtage_table();

}  // namespace jaco
