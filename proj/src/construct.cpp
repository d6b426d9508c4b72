#include "spanmu/construct.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>

#include "spanmu/error.hpp"

namespace spanmu {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Smallest common neighbor of a and b, or -1.
Vertex common_neighbor(const Graph& g, Vertex a, Vertex b)
{
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    auto i = na.begin();
    auto j = nb.begin();
    while (i != na.end() && j != nb.end()) {
        if (*i == *j) {
            return *i;
        }
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return -1;
}

} // namespace

std::string GrowthTrace::digest() const
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::int32_t v) {
        auto u = static_cast<std::uint32_t>(v);
        for (int i = 0; i < 4; ++i) {
            h ^= (u >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(start);
    for (const auto& s : steps) {
        mix(s.x);
        mix(s.z);
        mix(s.y);
        mix(s.z_was_new ? 1 : 0);
    }
    std::array<char, 17> buf{};
    std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf.data());
}

GrowthTrace grow_dominating_tree(const Graph& g, Vertex start)
{
    if (!g.contains(start)) {
        throw InvalidArgument("start vertex " + std::to_string(start) + " out of range");
    }
    if (!is_connected(g)) {
        throw DisconnectedGraph();
    }
    const int n = g.n();
    std::vector<char> in_tree(idx(n), 0);
    std::vector<int> core_neighbors(idx(n), 0);
    std::vector<Vertex> core_sorted;

    GrowthTrace tr;
    tr.start = start;
    auto add_core = [&](Vertex x) {
        tr.core.push_back(x);
        core_sorted.insert(std::upper_bound(core_sorted.begin(), core_sorted.end(), x), x);
        for (Vertex y : g.neighbors(x)) {
            ++core_neighbors[idx(y)];
        }
    };
    in_tree[idx(start)] = 1;
    add_core(start);

    for (bool grew = true; grew;) {
        grew = false;
        for (Vertex x = 0; x < n && !grew; ++x) {
            if (in_tree[idx(x)] || core_neighbors[idx(x)] > 0) {
                continue;
            }
            for (Vertex y : core_sorted) {
                Vertex z = common_neighbor(g, x, y);
                if (z < 0) {
                    continue;
                }
                GrowthStep step{x, z, y, !in_tree[idx(z)]};
                if (step.z_was_new) {
                    in_tree[idx(z)] = 1;
                    tr.base_edges.emplace_back(std::min(z, y), std::max(z, y));
                }
                in_tree[idx(x)] = 1;
                tr.base_edges.emplace_back(std::min(x, z), std::max(x, z));
                tr.steps.push_back(step);
                add_core(x);
                grew = true;
                break;
            }
        }
    }

    for (Vertex v = 0; v < n; ++v) {
        if (in_tree[idx(v)]) {
            tr.base.push_back(v);
        } else if (core_neighbors[idx(v)] == 0) {
            throw InternalError("growth exhausted but vertex " + std::to_string(v) + " is not dominated by the core");
        }
    }
    if (tr.t() > 2 * tr.k() - 1) {
        throw InternalError("base tree larger than 2k - 1");
    }
    return tr;
}

AttachedTree attach_pendants(const Graph& g, const GrowthTrace& trace)
{
    const int n = g.n();
    auto base_graph = Graph::from_edge_list(n, trace.base_edges);
    std::vector<char> in_base(idx(n), 0);
    for (Vertex v : trace.base) {
        in_base[idx(v)] = 1;
    }
    std::vector<char> in_core(idx(n), 0);
    std::vector<std::int64_t> spread(idx(n), std::numeric_limits<std::int64_t>::max());
    for (Vertex c : trace.core) {
        in_core[idx(c)] = 1;
        auto d = bfs_distances(base_graph, c);
        std::int64_t sum = 0;
        for (Vertex v : trace.base) {
            sum += d[idx(v)];
        }
        spread[idx(c)] = sum;
    }

    std::vector<Edge> edges = trace.base_edges;
    for (Vertex w = 0; w < n; ++w) {
        if (in_base[idx(w)]) {
            continue;
        }
        Vertex best = -1;
        for (Vertex c : g.neighbors(w)) {
            if (in_core[idx(c)] && (best < 0 || spread[idx(c)] < spread[idx(best)])) {
                best = c;
            }
        }
        if (best < 0) {
            throw InternalError("vertex " + std::to_string(w) + " has no core neighbor");
        }
        edges.emplace_back(std::min(w, best), std::max(w, best));
    }
    auto tree = Tree::from_edges(n, edges);
    auto dec = decompose(tree, trace.base);
    return {std::move(tree), std::move(dec)};
}

BuildResult build_spanning_tree(const Graph& g, const BuildOptions& opts)
{
    if (g.n() < 2) {
        throw InvalidArgument("spanning tree construction needs n >= 2");
    }
    if (!is_connected(g)) {
        throw DisconnectedGraph();
    }
    std::vector<Vertex> starts;
    if (opts.start) {
        if (!g.contains(*opts.start)) {
            throw InvalidArgument("start vertex out of range");
        }
        starts.push_back(*opts.start);
    } else {
        for (Vertex v = 0; v < g.n(); ++v) {
            starts.push_back(v);
        }
    }

    std::optional<BuildResult> best;
    for (Vertex s : starts) {
        auto trace = grow_dominating_tree(g, s);
        auto attached = attach_pendants(g, trace);
        auto res = opts.refine ? refine(g, attached, trace) : certify_unrefined(g, attached, trace);
        if (!best || res.certificate.mu < best->certificate.mu) {
            best.emplace(BuildResult{std::move(res.tree), std::move(res.certificate), std::move(trace)});
        }
    }
    return std::move(*best);
}

} // namespace spanmu
