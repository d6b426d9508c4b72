#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spanmu/graph.hpp"

namespace spanmu {

/// A free tree: connected, n - 1 edges. Vertex ids are stable across edge swaps
/// so that trees derived from a graph keep referring to the graph's ids.
class Tree {
public:
    /// Throws InvalidArgument unless the edges form a tree on 0..n-1.
    static Tree from_edges(int n, std::span<const Edge> edges);
    static Tree from_graph(Graph g);

    [[nodiscard]] const Graph& graph() const { return g_; }
    [[nodiscard]] int n() const { return g_.n(); }
    [[nodiscard]] int degree(Vertex v) const { return g_.degree(v); }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return g_.neighbors(v); }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
    [[nodiscard]] std::vector<Edge> edges() const { return g_.edges(); }

    /// T - removed + added. Throws InvalidArgument if the result is not a tree.
    [[nodiscard]] Tree swap_edge(Edge removed, Edge added) const;

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    explicit Tree(Graph g) : g_(std::move(g)) {}
    Graph g_;
};

/// Wiener index by the edge-cut identity sum_e |A_e| * |B_e|, O(n).
std::uint64_t wiener_index(const Tree& t);
Rational average_distance(const Tree& t);
int diameter(const Tree& t);
int pendant_count(const Tree& t);

/// True iff t has the vertex set of g and every tree edge is an edge of g.
bool is_spanning_tree_of(const Tree& t, const Graph& g);

/// Path v_1..v_a (ids 0..a-1), floor(b/2) pendants on v_1, ceil(b/2) on v_a.
Tree h_ab(int a, int b);

enum class PathKind { Internal, Pendant };

/// Maximal path from a branch vertex (degree >= 3) through degree-2 vertices.
struct PathSegment {
    std::vector<Vertex> vertices;
    PathKind kind = PathKind::Pendant;
    [[nodiscard]] int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct PathSegments {
    std::vector<PathSegment> segments;
    bool is_path = false; ///< no vertex of degree >= 3
};

/// Every pendant and internal path. Internal paths are reported once, starting
/// at their smaller endpoint.
PathSegments path_segments(const Tree& t);

/// Membership witness for T_{a,b}: a base subtree plus leaves hanging off it.
struct Decomposition {
    std::vector<Vertex> base;       ///< sorted
    std::vector<Vertex> attachment; ///< per vertex: base neighbor for pendants, -1 for base vertices

    [[nodiscard]] int a() const { return static_cast<int>(base.size()); }
    [[nodiscard]] int b() const { return static_cast<int>(attachment.size()) - a(); }
    [[nodiscard]] bool in_base(Vertex v) const { return attachment[static_cast<std::size_t>(v)] < 0; }
};

/// Throws MembershipError if `base` does not induce a subtree or some other
/// vertex is not a leaf adjacent to the base; InvalidArgument for bad ids.
Decomposition decompose(const Tree& t, std::span<const Vertex> base);

/// Result of moving the branch set M of v onto u or onto w.
struct ShiftResult {
    Tree toward_u;
    Tree toward_w;
    int moved = 0;  ///< |V(M)|
    int p_size = 0; ///< component of t - v on u's side
    int q_size = 0; ///< component of t - v on w's side
    int reach = 1;  ///< d(v,u) = d(v,w): 1, or 2 for the subdivided form
};

/// u and w must both be neighbors of v, or both at distance 2 through
/// degree-2 vertices; v must have at least one further neighbor.
ShiftResult shift_transform(const Tree& t, Vertex v, Vertex u, Vertex w);

/// Isomorphism-invariant string (AHU encoding rooted at the center).
std::string canonical_form(const Tree& t);

} // namespace spanmu
