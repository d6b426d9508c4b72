#include "spanmu/graph.hpp"

#include <algorithm>
#include <string>

#include "spanmu/error.hpp"

namespace spanmu {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges)
{
    if (n < 1) {
        throw InvalidArgument("graph needs at least one vertex");
    }
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
        }
        if (u == v) {
            throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        }
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    int twice_m = 0;
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        twice_m += static_cast<int>(nb.size());
    }
    return Graph(std::move(adj), twice_m / 2);
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (!contains(u) || !contains(v)) {
        return false;
    }
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(g.n()));
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        int du = dist[static_cast<std::size_t>(u)];
        for (Vertex v : g.neighbors(u)) {
            auto& dv = dist[static_cast<std::size_t>(v)];
            if (dv == kUnreachable) {
                dv = du + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<int> distance_matrix(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> d(n * n);
    for (Vertex s = 0; s < g.n(); ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), d.begin() + static_cast<std::ptrdiff_t>(n * static_cast<std::size_t>(s)));
    }
    return d;
}

bool is_connected(const Graph& g)
{
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

std::uint64_t wiener_index(const Graph& g)
{
    std::uint64_t total = 0;
    for (Vertex s = 0; s < g.n(); ++s) {
        auto d = bfs_distances(g, s);
        for (Vertex v = s + 1; v < g.n(); ++v) {
            int x = d[static_cast<std::size_t>(v)];
            if (x == kUnreachable) {
                throw DisconnectedGraph();
            }
            total += static_cast<std::uint64_t>(x);
        }
    }
    return total;
}

Rational average_distance(const Graph& g)
{
    if (g.n() < 2) {
        throw InvalidArgument("average distance needs at least two vertices");
    }
    auto w = wiener_index(g);
    return Rational(BigInt(static_cast<unsigned long>(w)), BigInt(static_cast<unsigned long>(pair_count(g.n()))));
}

StructureProfile structure_profile(const Graph& g)
{
    StructureProfile p;
    p.degrees.resize(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
        p.degrees[static_cast<std::size_t>(v)] = g.degree(v);
        if (g.degree(v) == 1) {
            p.pendant_vertices.push_back(v);
        }
    }
    p.connected = true;
    for (Vertex s = 0; s < g.n() && p.connected; ++s) {
        for (int x : bfs_distances(g, s)) {
            if (x == kUnreachable) {
                p.connected = false;
                break;
            }
            p.diameter = std::max(p.diameter, x);
        }
    }
    if (!p.connected) {
        p.diameter = 0;
    }
    return p;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> set)
{
    for (Vertex v : set) {
        if (!g.contains(v)) {
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        }
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (g.has_edge(set[i], set[j])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace spanmu
