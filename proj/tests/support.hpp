#pragma once

// Independent reference implementations and graph builders shared by tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "spanmu/graph.hpp"
#include "spanmu/tree.hpp"

namespace testing {

using spanmu::Edge;
using spanmu::Graph;
using spanmu::Tree;
using spanmu::Vertex;

inline Graph make_graph(int n, std::vector<Edge> edges) { return Graph::from_edge_list(n, edges); }

inline Graph path_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return make_graph(n, e);
}

inline Graph cycle_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    }
    return make_graph(n, e);
}

inline Graph complete_graph(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
        }
    }
    return make_graph(n, e);
}

inline Graph star_graph(int n)
{
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) {
        e.emplace_back(0, v);
    }
    return make_graph(n, e);
}

inline Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    for (auto& [a, b] : e) {
        if (a > b) {
            std::swap(a, b);
        }
    }
    return make_graph(10, e);
}

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> floyd(const Graph& g)
{
    const int n = g.n();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int u : g.neighbors(v)) {
            d[v][u] = 1;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x == inf) {
                x = -1;
            }
        }
    }
    return d;
}

/// Wiener index by Floyd-Warshall.
inline std::int64_t brute_wiener(const Graph& g)
{
    auto d = floyd(g);
    std::int64_t w = 0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            w += d[i][j];
        }
    }
    return w;
}

inline std::int64_t brute_wiener(const Tree& t) { return brute_wiener(t.graph()); }

/// Independence number by trying every subset (n <= 20).
inline int naive_alpha(const Graph& g)
{
    const int n = g.n();
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) {
            adj[v] |= 1U << u;
        }
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) {
            continue;
        }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if ((s >> v & 1U) && (adj[v] & s)) {
                ok = false;
            }
        }
        if (ok) {
            best = size;
        }
    }
    return best;
}

/// Uniform random labeled tree from a random Prüfer-like attachment order.
inline std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng)
{
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) {
        int parent = order[rng() % static_cast<std::uint64_t>(i)];
        e.emplace_back(std::min(parent, order[i]), std::max(parent, order[i]));
    }
    return e;
}

inline Tree random_tree(int n, std::mt19937_64& rng) { return Tree::from_edges(n, random_tree_edges(n, rng)); }

/// Random connected graph: random tree plus each other pair with probability num/den.
inline Graph random_connected(int n, int num, int den, std::mt19937_64& rng)
{
    auto e = random_tree_edges(n, rng);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (static_cast<int>(rng() % static_cast<std::uint64_t>(den)) < num) {
                e.emplace_back(u, v);
            }
        }
    }
    return make_graph(n, e);
}

/// Relabels vertices by a permutation.
inline Tree relabel(const Tree& t, const std::vector<int>& perm)
{
    std::vector<Edge> e;
    for (auto [u, v] : t.edges()) {
        e.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    }
    return Tree::from_edges(t.n(), e);
}

} // namespace testing
