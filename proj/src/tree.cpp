#include "spanmu/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "spanmu/error.hpp"

namespace spanmu {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Parent array and DFS preorder of t rooted at `root`.
void root_tree(const Graph& g, Vertex root, std::vector<Vertex>& parent, std::vector<Vertex>& order)
{
    parent.assign(idx(g.n()), -1);
    order.clear();
    order.reserve(idx(g.n()));
    std::vector<Vertex> stack{root};
    std::vector<char> seen(idx(g.n()), 0);
    seen[idx(root)] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (Vertex v : g.neighbors(u)) {
            if (!seen[idx(v)]) {
                seen[idx(v)] = 1;
                parent[idx(v)] = u;
                stack.push_back(v);
            }
        }
    }
}

// Size of the component of t - blocked containing start.
int component_size(const Graph& g, Vertex start, Vertex blocked)
{
    std::vector<char> seen(idx(g.n()), 0);
    seen[idx(blocked)] = 1;
    seen[idx(start)] = 1;
    std::vector<Vertex> stack{start};
    int count = 0;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        ++count;
        for (Vertex v : g.neighbors(u)) {
            if (!seen[idx(v)]) {
                seen[idx(v)] = 1;
                stack.push_back(v);
            }
        }
    }
    return count;
}

std::string encode_rooted(const Graph& g, Vertex root)
{
    std::vector<Vertex> parent;
    std::vector<Vertex> order;
    root_tree(g, root, parent, order);
    std::vector<std::vector<std::string>> child_codes(idx(g.n()));
    std::vector<std::string> code(idx(g.n()));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        auto& kids = child_codes[idx(v)];
        std::sort(kids.begin(), kids.end());
        std::string c = "(";
        for (auto& k : kids) {
            c += k;
        }
        c += ')';
        if (parent[idx(v)] >= 0) {
            child_codes[idx(parent[idx(v)])].push_back(std::move(c));
        } else {
            code[idx(v)] = std::move(c);
        }
    }
    return code[idx(root)];
}

} // namespace

Tree Tree::from_edges(int n, std::span<const Edge> edges)
{
    if (n < 1) {
        throw InvalidArgument("tree needs at least one vertex");
    }
    if (static_cast<int>(edges.size()) != n - 1) {
        throw InvalidArgument("a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) +
                              " edges, got " + std::to_string(edges.size()));
    }
    return from_graph(Graph::from_edge_list(n, edges));
}

Tree Tree::from_graph(Graph g)
{
    if (g.m() != g.n() - 1 || !is_connected(g)) {
        throw InvalidArgument("edge set is not a tree");
    }
    return Tree(std::move(g));
}

Tree Tree::swap_edge(Edge removed, Edge added) const
{
    if (!has_edge(removed.first, removed.second)) {
        throw InvalidArgument("swap_edge: removed edge not in tree");
    }
    auto es = edges();
    auto norm = [](Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; };
    auto r = norm(removed);
    std::erase(es, r);
    es.push_back(norm(added));
    return from_edges(n(), es);
}

std::uint64_t wiener_index(const Tree& t)
{
    std::vector<Vertex> parent;
    std::vector<Vertex> order;
    root_tree(t.graph(), 0, parent, order);
    std::vector<std::uint64_t> size(idx(t.n()), 1);
    const auto n = static_cast<std::uint64_t>(t.n());
    std::uint64_t w = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (parent[idx(v)] >= 0) {
            w += size[idx(v)] * (n - size[idx(v)]);
            size[idx(parent[idx(v)])] += size[idx(v)];
        }
    }
    return w;
}

Rational average_distance(const Tree& t)
{
    if (t.n() < 2) {
        throw InvalidArgument("average distance needs at least two vertices");
    }
    return Rational(BigInt(static_cast<unsigned long>(wiener_index(t))),
                    BigInt(static_cast<unsigned long>(pair_count(t.n()))));
}

int diameter(const Tree& t)
{
    auto d0 = bfs_distances(t.graph(), 0);
    auto far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_distances(t.graph(), far);
    return *std::max_element(d1.begin(), d1.end());
}

int pendant_count(const Tree& t)
{
    int p = 0;
    for (Vertex v = 0; v < t.n(); ++v) {
        p += t.degree(v) == 1 ? 1 : 0;
    }
    return p;
}

bool is_spanning_tree_of(const Tree& t, const Graph& g)
{
    if (t.n() != g.n()) {
        return false;
    }
    for (auto [u, v] : t.edges()) {
        if (!g.has_edge(u, v)) {
            return false;
        }
    }
    return true;
}

Tree h_ab(int a, int b)
{
    if (a < 2 || b < 2) {
        throw InvalidArgument("h_ab needs a >= 2 and b >= 2");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < a; ++i) {
        edges.emplace_back(i, i + 1);
    }
    Vertex next = a;
    for (int i = 0; i < b / 2; ++i) {
        edges.emplace_back(0, next++);
    }
    for (int i = 0; i < b - b / 2; ++i) {
        edges.emplace_back(a - 1, next++);
    }
    return Tree::from_edges(a + b, edges);
}

PathSegments path_segments(const Tree& t)
{
    PathSegments out;
    bool has_branch = false;
    for (Vertex v0 = 0; v0 < t.n(); ++v0) {
        if (t.degree(v0) < 3) {
            continue;
        }
        has_branch = true;
        for (Vertex first : t.neighbors(v0)) {
            PathSegment seg;
            seg.vertices = {v0, first};
            Vertex prev = v0;
            Vertex cur = first;
            while (t.degree(cur) == 2) {
                auto nb = t.neighbors(cur);
                Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
                seg.vertices.push_back(cur);
            }
            if (t.degree(cur) == 1) {
                seg.kind = PathKind::Pendant;
            } else {
                seg.kind = PathKind::Internal;
                if (cur < v0) {
                    continue; // reported from the other end
                }
            }
            out.segments.push_back(std::move(seg));
        }
    }
    out.is_path = !has_branch;
    return out;
}

Decomposition decompose(const Tree& t, std::span<const Vertex> base)
{
    if (base.empty()) {
        throw InvalidArgument("decompose: base must be nonempty");
    }
    Decomposition d;
    d.attachment.assign(idx(t.n()), 0);
    std::vector<char> in_base(idx(t.n()), 0);
    for (Vertex v : base) {
        if (!t.graph().contains(v)) {
            throw InvalidArgument("decompose: base vertex out of range");
        }
        in_base[idx(v)] = 1;
    }
    for (Vertex v = 0; v < t.n(); ++v) {
        if (in_base[idx(v)]) {
            d.base.push_back(v);
            d.attachment[idx(v)] = -1;
        }
    }
    // A vertex subset of a tree induces a subtree iff it spans |S| - 1 tree edges.
    int inner_edges = 0;
    for (auto [u, v] : t.edges()) {
        inner_edges += (in_base[idx(u)] && in_base[idx(v)]) ? 1 : 0;
    }
    if (inner_edges != d.a() - 1) {
        throw MembershipError("base does not induce a subtree");
    }
    for (Vertex v = 0; v < t.n(); ++v) {
        if (in_base[idx(v)]) {
            continue;
        }
        if (t.degree(v) != 1 || !in_base[idx(t.neighbors(v)[0])]) {
            throw MembershipError("vertex " + std::to_string(v) + " is not a leaf attached to the base");
        }
        d.attachment[idx(v)] = t.neighbors(v)[0];
    }
    return d;
}

ShiftResult shift_transform(const Tree& t, Vertex v, Vertex u, Vertex w)
{
    const Graph& g = t.graph();
    if (!g.contains(v) || !g.contains(u) || !g.contains(w) || u == w || u == v || w == v) {
        throw InvalidArgument("shift_transform: need three distinct vertices");
    }
    // First vertex on the way from v to target, or -1 if target is not at the
    // required position.
    auto first_hop = [&](Vertex target, int reach) -> Vertex {
        if (reach == 1) {
            return t.has_edge(v, target) ? target : -1;
        }
        for (Vertex x : g.neighbors(v)) {
            if (t.degree(x) == 2 && t.has_edge(x, target)) {
                return x;
            }
        }
        return -1;
    };
    int reach = t.has_edge(v, u) ? 1 : 2;
    Vertex hop_u = first_hop(u, reach);
    Vertex hop_w = first_hop(w, reach);
    if (hop_u < 0 || hop_w < 0 || hop_u == hop_w) {
        throw InvalidArgument("shift_transform: u and w must both be neighbors of v, or both at distance 2 "
                              "through degree-2 vertices");
    }
    std::vector<Vertex> roots;
    for (Vertex r : g.neighbors(v)) {
        if (r != hop_u && r != hop_w) {
            roots.push_back(r);
        }
    }
    if (roots.empty()) {
        throw InvalidArgument("shift_transform: v has no branch outside the through-path");
    }

    ShiftResult res{t, t, 0, 0, 0, reach};
    res.p_size = component_size(g, hop_u, v);
    res.q_size = component_size(g, hop_w, v);
    res.moved = t.n() - 1 - res.p_size - res.q_size;

    auto moved_to = [&](Vertex target) {
        std::vector<Edge> es;
        for (auto [a, b] : t.edges()) {
            bool to_root = (a == v && std::find(roots.begin(), roots.end(), b) != roots.end()) ||
                           (b == v && std::find(roots.begin(), roots.end(), a) != roots.end());
            if (to_root) {
                es.emplace_back(target, a == v ? b : a);
            } else {
                es.emplace_back(a, b);
            }
        }
        return Tree::from_edges(t.n(), es);
    };
    res.toward_u = moved_to(u);
    res.toward_w = moved_to(w);
    return res;
}

std::string canonical_form(const Tree& t)
{
    if (t.n() == 1) {
        return "()";
    }
    // Peel leaves layer by layer to find the center(s).
    std::vector<int> deg(idx(t.n()));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < t.n(); ++v) {
        deg[idx(v)] = t.degree(v);
        if (deg[idx(v)] <= 1) {
            layer.push_back(v);
        }
    }
    int remaining = t.n();
    while (remaining > 2) {
        std::vector<Vertex> next;
        remaining -= static_cast<int>(layer.size());
        for (Vertex leaf : layer) {
            for (Vertex nb : t.neighbors(leaf)) {
                if (--deg[idx(nb)] == 1) {
                    next.push_back(nb);
                }
            }
        }
        layer = std::move(next);
    }
    std::string best = encode_rooted(t.graph(), layer[0]);
    if (layer.size() == 2) {
        best = std::min(best, encode_rooted(t.graph(), layer[1]));
    }
    return best;
}

} // namespace spanmu
