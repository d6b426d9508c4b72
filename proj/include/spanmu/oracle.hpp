#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "spanmu/graph.hpp"
#include "spanmu/rational.hpp"
#include "spanmu/tree.hpp"

namespace spanmu {

inline constexpr std::uint64_t kDefaultTreeCap = 10'000'000;

/// Number of spanning trees by the matrix-tree theorem (Bareiss elimination).
BigInt kirchhoff_count(const Graph& g);

/// Calls `visit` on every spanning tree of g exactly once, in a fixed order.
///
/// Throws DisconnectedGraph, or CapExceeded before visiting anything when
/// the graph has more than `cap` spanning trees.
void for_each_spanning_tree(const Graph& g, std::uint64_t cap, const std::function<void(const Tree&)>& visit);

std::vector<Tree> spanning_trees(const Graph& g, std::uint64_t cap = kDefaultTreeCap);

struct MrctResult {
    Tree tree;
    Rational mu;
    std::uint64_t trees = 0; ///< number of spanning trees examined
};

/// Exact minimum average distance spanning tree; first minimum in
/// enumeration order.
MrctResult mrct(const Graph& g, std::uint64_t cap = kDefaultTreeCap);

/// Prüfer sequence of a labeled tree on n >= 2 vertices.
std::vector<int> prufer_encode(const Tree& t);

/// Tree on n = seq.size() + 2 vertices; throws InvalidArgument on bad labels.
Tree prufer_decode(std::span<const int> seq);

/// Every labeled tree on 1 <= n <= 9 vertices, in lexicographic Prüfer order.
void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& visit);
std::vector<Tree> all_labeled_trees(int n);

} // namespace spanmu
