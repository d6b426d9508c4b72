#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spanmu/rational.hpp"

namespace spanmu {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1, immutable after construction.
///
/// Neighbor lists are sorted ascending and symmetric; duplicate input edges
/// collapse to one. n >= 1.
class Graph {
public:
    /// Builds from an edge list. Rejects self-loops and out-of-range ids.
    static Graph from_edge_list(int n, std::span<const Edge> edges);

    [[nodiscard]] int n() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    [[nodiscard]] bool contains(Vertex v) const { return v >= 0 && v < n(); }

    /// All edges as (u, v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<std::vector<Vertex>> adj, int m) : adj_(std::move(adj)), m_(m) {}

    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

inline constexpr int kUnreachable = -1;

/// Breadth-first distances from `source`; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Row-major n x n distance matrix from one BFS per vertex.
std::vector<int> distance_matrix(const Graph& g);

bool is_connected(const Graph& g);

/// Sum of d(u,v) over unordered pairs. Throws DisconnectedGraph.
std::uint64_t wiener_index(const Graph& g);

/// wiener_index / C(n,2). Throws InvalidArgument for n < 2.
Rational average_distance(const Graph& g);

struct StructureProfile {
    bool connected = false;
    int diameter = 0; ///< meaningful only when connected
    std::vector<int> degrees;
    std::vector<Vertex> pendant_vertices;
};

StructureProfile structure_profile(const Graph& g);

/// True iff no edge of g joins two members of `set`. Throws on out-of-range ids.
bool is_independent_set(const Graph& g, std::span<const Vertex> set);

/// C(n,2) as an exact integer.
inline std::uint64_t pair_count(int n)
{
    auto nn = static_cast<std::uint64_t>(n);
    return nn * (nn - 1) / 2;
}

} // namespace spanmu
