#pragma once

#include <string>
#include <vector>

#include "jaco/graph.hpp"

namespace jaco {

// result carriers shared by the engine and the oracle suite; data only

struct MurtageResult {
    int value = 0;
    std::string method;  // "theorem" or "oracle"
    std::vector<Edge> witness_edges;  // added pairs realizing the drop, empty when value = 0
};

struct GammaMinusResult {
    int value = 0;
    bool defined = true;  // false: gamma = 1, value 0 by convention
    VertexSet witness = 0;  // removed vertices, 0 when undefined
};

struct BondageResult {
    int value = 0;
    std::vector<Edge> witness_edges;  // removed edges raising gamma
};

}  // namespace jaco
