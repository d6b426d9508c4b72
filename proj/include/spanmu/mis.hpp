#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "spanmu/graph.hpp"

namespace spanmu {

struct MisResult {
    std::vector<Vertex> set; ///< sorted ascending
    int alpha = 0;
};

/// Exact maximum independent set by branch and bound.
///
/// Branches on a maximum-degree vertex (include first), folds degree-0 and
/// degree-1 vertices into the solution, and prunes with a greedy clique cover.
/// The returned set is the lexicographically least maximum independent set.
MisResult max_independent_set(const Graph& g);

/// Same, but gives up once `budget` has elapsed; nullopt means alpha unknown.
std::optional<MisResult> max_independent_set(const Graph& g, std::chrono::milliseconds budget);

int independence_number(const Graph& g);

} // namespace spanmu
