#include "spanmu/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "spanmu/error.hpp"

namespace spanmu {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

class Components {
public:
    explicit Components(int n) : parent_(idx(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int v)
    {
        while (parent_[idx(v)] != v) {
            parent_[idx(v)] = parent_[idx(parent_[idx(v)])];
            v = parent_[idx(v)];
        }
        return v;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[idx(b)] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

class Enumerator {
public:
    Enumerator(const Graph& g, const std::function<void(const Tree&)>& visit)
        : n_(g.n()), edges_(g.edges()), visit_(visit)
    {
    }

    void run()
    {
        std::vector<Edge> chosen;
        recurse(0, chosen);
    }

private:
    // True if chosen plus edges_[from..] still connects every vertex.
    bool can_span(std::size_t from, const std::vector<Edge>& chosen) const
    {
        Components c(n_);
        int parts = n_;
        for (auto [u, v] : chosen) {
            parts -= c.unite(u, v) ? 1 : 0;
        }
        for (std::size_t i = from; i < edges_.size() && parts > 1; ++i) {
            parts -= c.unite(edges_[i].first, edges_[i].second) ? 1 : 0;
        }
        return parts == 1;
    }

    bool closes_cycle(const std::vector<Edge>& chosen, Edge e) const
    {
        Components c(n_);
        for (auto [u, v] : chosen) {
            c.unite(u, v);
        }
        return c.find(e.first) == c.find(e.second);
    }

    void recurse(std::size_t i, std::vector<Edge>& chosen)
    {
        if (static_cast<int>(chosen.size()) == n_ - 1) {
            visit_(Tree::from_edges(n_, chosen));
            return;
        }
        if (i == edges_.size()) {
            return;
        }
        if (!closes_cycle(chosen, edges_[i])) {
            chosen.push_back(edges_[i]);
            recurse(i + 1, chosen);
            chosen.pop_back();
        }
        if (can_span(i + 1, chosen)) {
            recurse(i + 1, chosen);
        }
    }

    int n_;
    std::vector<Edge> edges_;
    const std::function<void(const Tree&)>& visit_;
};

} // namespace

BigInt kirchhoff_count(const Graph& g)
{
    const int n = g.n();
    if (n == 1) {
        return 1;
    }
    // Laplacian with the last row and column removed.
    const int r = n - 1;
    std::vector<std::vector<BigInt>> a(idx(r), std::vector<BigInt>(idx(r), 0));
    for (int u = 0; u < r; ++u) {
        a[idx(u)][idx(u)] = g.degree(u);
        for (Vertex v : g.neighbors(u)) {
            if (v < r) {
                a[idx(u)][idx(v)] = -1;
            }
        }
    }
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < r; ++k) {
        if (a[idx(k)][idx(k)] == 0) {
            int p = k + 1;
            while (p < r && a[idx(p)][idx(k)] == 0) {
                ++p;
            }
            if (p == r) {
                return 0;
            }
            std::swap(a[idx(k)], a[idx(p)]);
            sign = -sign;
        }
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < r; ++j) {
                BigInt v = a[idx(i)][idx(j)] * a[idx(k)][idx(k)] - a[idx(i)][idx(k)] * a[idx(k)][idx(j)];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[idx(i)][idx(j)] = v;
            }
        }
        prev = a[idx(k)][idx(k)];
    }
    return sign * a[idx(r - 1)][idx(r - 1)];
}

void for_each_spanning_tree(const Graph& g, std::uint64_t cap, const std::function<void(const Tree&)>& visit)
{
    if (!is_connected(g)) {
        throw DisconnectedGraph();
    }
    BigInt count = kirchhoff_count(g);
    if (count > BigInt(std::to_string(cap))) {
        throw CapExceeded("graph has " + count.get_str() + " spanning trees, cap is " + std::to_string(cap));
    }
    Enumerator(g, visit).run();
}

std::vector<Tree> spanning_trees(const Graph& g, std::uint64_t cap)
{
    std::vector<Tree> out;
    for_each_spanning_tree(g, cap, [&out](const Tree& t) { out.push_back(t); });
    return out;
}

MrctResult mrct(const Graph& g, std::uint64_t cap)
{
    if (g.n() < 2) {
        throw InvalidArgument("mrct needs at least two vertices");
    }
    std::optional<Tree> best;
    std::uint64_t best_w = 0;
    std::uint64_t seen = 0;
    for_each_spanning_tree(g, cap, [&](const Tree& t) {
        ++seen;
        auto w = wiener_index(t);
        if (!best || w < best_w) {
            best = t;
            best_w = w;
        }
    });
    return {*best, average_distance(*best), seen};
}

std::vector<int> prufer_encode(const Tree& t)
{
    const int n = t.n();
    if (n < 2) {
        throw InvalidArgument("Prüfer encoding needs n >= 2");
    }
    std::vector<int> degree(idx(n));
    for (int v = 0; v < n; ++v) {
        degree[idx(v)] = t.degree(v);
    }
    std::vector<char> removed(idx(n), 0);
    std::vector<int> seq;
    for (int step = 0; step < n - 2; ++step) {
        int leaf = 0;
        while (removed[idx(leaf)] || degree[idx(leaf)] != 1) {
            ++leaf;
        }
        for (Vertex w : t.neighbors(leaf)) {
            if (!removed[idx(w)]) {
                seq.push_back(w);
                --degree[idx(w)];
                break;
            }
        }
        removed[idx(leaf)] = 1;
    }
    return seq;
}

Tree prufer_decode(std::span<const int> seq)
{
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(idx(n), 1);
    for (int x : seq) {
        if (x < 0 || x >= n) {
            throw InvalidArgument("Prüfer label " + std::to_string(x) + " out of range");
        }
        ++degree[idx(x)];
    }
    std::vector<Edge> edges;
    for (int x : seq) {
        int leaf = 0;
        while (degree[idx(leaf)] != 1) {
            ++leaf;
        }
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --degree[idx(leaf)];
        --degree[idx(x)];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[idx(v)] == 1) {
            if (a < 0) {
                a = v;
            } else {
                edges.emplace_back(a, v);
            }
        }
    }
    return Tree::from_edges(n, edges);
}

void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& visit)
{
    if (n < 1 || n > 9) {
        throw InvalidArgument("labeled tree enumeration needs 1 <= n <= 9");
    }
    if (n == 1) {
        visit(Tree::from_edges(1, {}));
        return;
    }
    std::vector<int> seq(idx(n - 2), 0);
    while (true) {
        visit(prufer_decode(seq));
        int i = n - 3;
        while (i >= 0 && seq[idx(i)] == n - 1) {
            seq[idx(i)] = 0;
            --i;
        }
        if (i < 0) {
            return;
        }
        ++seq[idx(i)];
    }
}

std::vector<Tree> all_labeled_trees(int n)
{
    std::vector<Tree> out;
    for_each_labeled_tree(n, [&out](const Tree& t) { out.push_back(t); });
    return out;
}

} // namespace spanmu
