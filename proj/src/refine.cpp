#include "spanmu/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spanmu/error.hpp"
#include "spanmu/formulas.hpp"

namespace spanmu {

namespace {

Edge ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

struct Outcome {
    CertificateCase kind = CertificateCase::ThNewFallback;
    Witness witness;
};

// Base tree relabelled onto 0..t-1 so that tree utilities apply to it alone.
Tree base_tree(const GrowthTrace& trace)
{
    std::map<Vertex, Vertex> local;
    for (Vertex v : trace.base) {
        local.emplace(v, static_cast<Vertex>(local.size()));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : trace.base_edges) {
        edges.emplace_back(local.at(u), local.at(v));
    }
    return Tree::from_edges(trace.t(), edges);
}

// Base path v_1..v_{2k-1} in order, starting at the endpoint with smaller id.
std::vector<Vertex> base_path(const GrowthTrace& trace, const Graph& base_graph)
{
    Vertex first = -1;
    for (Vertex v : trace.base) {
        if (base_graph.degree(v) <= 1) {
            first = v;
            break;
        }
    }
    std::vector<Vertex> path{first};
    Vertex prev = -1;
    Vertex cur = first;
    while (static_cast<int>(path.size()) < trace.t()) {
        Vertex next = -1;
        for (Vertex w : base_graph.neighbors(cur)) {
            if (w != prev) {
                next = w;
                break;
            }
        }
        prev = cur;
        cur = next;
        path.push_back(cur);
    }
    return path;
}

class PathCase {
public:
    PathCase(const Graph& g, const Tree& tree, std::vector<Vertex> path, int k)
        : g_(g), tree_(tree), path_(std::move(path)), k_(k)
    {
    }

    Outcome run(bool transform, std::vector<Tree>& candidates);

private:
    // 1-based access to the base path.
    [[nodiscard]] Vertex at(int i) const { return path_[static_cast<std::size_t>(i - 1)]; }
    [[nodiscard]] int len() const { return static_cast<int>(path_.size()); }

    Outcome with_swap(CertificateCase c, Edge removed, Edge added, std::vector<Tree>& candidates) const
    {
        candidates.push_back(tree_.swap_edge(removed, added));
        return {c, SwappedEdge{ordered(removed.first, removed.second), ordered(added.first, added.second)}};
    }

    [[nodiscard]] std::vector<Vertex> pendants_of(Vertex v) const
    {
        std::vector<Vertex> out;
        for (Vertex w : tree_.neighbors(v)) {
            if (tree_.degree(w) == 1) {
                out.push_back(w);
            }
        }
        return out;
    }

    // Pendant of v_end with no graph edge to the path outside v_end, or -1.
    [[nodiscard]] Vertex free_pendant(int end) const
    {
        for (Vertex p : pendants_of(at(end))) {
            bool free = true;
            for (int i = 1; i <= len() && free; ++i) {
                if (i != end && g_.has_edge(p, at(i))) {
                    free = false;
                }
            }
            if (free) {
                return p;
            }
        }
        return -1;
    }

    // Re-hang the pendants of v_end on their first graph neighbor along the
    // path, walking away from v_end.
    Tree rehang(int end) const
    {
        std::vector<Edge> edges;
        auto moved = pendants_of(at(end));
        for (auto e : tree_.edges()) {
            bool drop = false;
            for (Vertex p : moved) {
                if (e == ordered(p, at(end))) {
                    drop = true;
                }
            }
            if (!drop) {
                edges.push_back(e);
            }
        }
        for (Vertex p : moved) {
            Vertex target = -1;
            for (int s = 1; s < len() && target < 0; ++s) {
                int i = end == 1 ? 1 + s : len() - s;
                if (g_.has_edge(p, at(i))) {
                    target = at(i);
                }
            }
            if (target < 0) {
                throw InternalError("pendant without a path neighbor in rehang");
            }
            edges.push_back(ordered(p, target));
        }
        return Tree::from_edges(tree_.n(), edges);
    }

    // Pendant counts a_1..a_k at the odd positions.
    [[nodiscard]] std::vector<int> odd_loads() const
    {
        std::vector<int> a;
        for (int s = 1; s <= k_; ++s) {
            int i = 2 * s - 1;
            int path_deg = (i == 1 || i == len()) ? 1 : 2;
            a.push_back(tree_.degree(at(i)) - path_deg);
        }
        return a;
    }

    const Graph& g_;
    const Tree& tree_;
    std::vector<Vertex> path_;
    int k_;
};

Outcome PathCase::run(bool transform, std::vector<Tree>& candidates)
{
    const int top = len();
    for (int i = 2; i <= top; i += 2) {
        if (tree_.degree(at(i)) != 2) {
            throw InternalError("pendant attached at an even position of the base path");
        }
    }
    if (diameter(tree_) <= 2 * k_ - 1) {
        return {CertificateCase::Diameter, {}};
    }
    if (!transform) {
        return {CertificateCase::ThNewFallback, {}};
    }

    for (int i = 1; i <= top; ++i) {
        for (int j = i + 2; j <= top; ++j) {
            if (!g_.has_edge(at(i), at(j))) {
                continue;
            }
            if (tree_.degree(at(i + 1)) == 2) {
                return with_swap(CertificateCase::Case1T1, {at(i), at(i + 1)}, {at(i), at(j)}, candidates);
            }
            if (tree_.degree(at(j - 1)) == 2) {
                return with_swap(CertificateCase::Case1T2, {at(j - 1), at(j)}, {at(i), at(j)}, candidates);
            }
            int leg1 = i;
            int leg2 = j - i;
            int leg3 = top - j + 1;
            if (leg1 % 2 == 1 && leg2 % 2 == 1 && leg3 % 2 == 1) {
                return with_swap(CertificateCase::Case1ParityExtra, {at(i), at(i + 1)}, {at(i), at(j)}, candidates);
            }
            for (int m = i + 1; m < j; ++m) {
                if (tree_.degree(at(m)) == 2) {
                    return with_swap(CertificateCase::Case1ParityAdd, {at(m), at(m + 1)}, {at(i), at(j)},
                                     candidates);
                }
            }
        }
    }

    Vertex u = free_pendant(1);
    if (u < 0) {
        candidates.push_back(rehang(1));
        return {CertificateCase::Case2T3, {}};
    }
    Vertex w = free_pendant(top);
    if (w < 0) {
        candidates.push_back(rehang(top));
        return {CertificateCase::Case2T3, {}};
    }

    if (g_.has_edge(u, w)) {
        auto a = odd_loads();
        int lowest = *std::min_element(a.begin(), a.end());
        if (std::count(a.begin(), a.end(), lowest) == 1 && a.front() == lowest) {
            std::reverse(path_.begin(), path_.end());
            std::swap(u, w);
            a = odd_loads();
        }
        const int outside = tree_.n() - len();
        if (std::accumulate(a.begin(), a.end(), 0) != outside) {
            throw InternalError("pendant counts at odd positions do not sum to n - 2k + 1");
        }
        int s = 2;
        for (int c = 2; c <= k_; ++c) {
            if (a[static_cast<std::size_t>(c - 1)] < a[static_cast<std::size_t>(s - 1)]) {
                s = c;
            }
        }
        if (a[static_cast<std::size_t>(s - 1)] * k_ > outside) {
            throw InternalError("selected position carries more than the average load");
        }
        return with_swap(CertificateCase::Case2T4, {at(2 * s - 2), at(2 * s - 1)}, {u, w}, candidates);
    }

    IndependentSetWitness wit{{u, w}};
    for (int i = 2; i < top; i += 2) {
        wit.vertices.push_back(at(i));
    }
    std::sort(wit.vertices.begin(), wit.vertices.end());
    if (is_independent_set(g_, wit.vertices)) {
        return {CertificateCase::EnlargedIndep, std::move(wit)};
    }
    return {CertificateCase::ThNewFallback, {}};
}

Outcome classify(const Graph& g, const AttachedTree& attached, const GrowthTrace& trace, bool transform,
                 std::vector<Tree>& candidates)
{
    const int n = g.n();
    const int k = trace.k();
    const int t = trace.t();
    if (t == 1) {
        return {CertificateCase::Star, {}};
    }
    if (n <= 2 * k - 1) {
        return {CertificateCase::PathTrivial, {}};
    }
    if (t <= 2 * k - 2) {
        return {CertificateCase::LeAdd, {}};
    }

    auto local = base_tree(trace);
    auto segs = path_segments(local);
    if (!segs.is_path) {
        for (const auto& s : segs.segments) {
            if (s.length() % 2 != 0) {
                throw InternalError("odd path segment in a full base tree");
            }
        }
        return {k >= 4 ? CertificateCase::LeExtra : CertificateCase::ThNewFallback, {}};
    }

    auto base_graph = Graph::from_edge_list(n, trace.base_edges);
    PathCase pc(g, attached.tree, base_path(trace, base_graph), k);
    return pc.run(transform, candidates);
}

RefineResult finish(const Graph& g, const AttachedTree& attached, const GrowthTrace& trace, bool transform)
{
    std::vector<Tree> candidates{attached.tree};
    Outcome out = classify(g, attached, trace, transform, candidates);

    std::size_t best = 0;
    Rational best_mu = average_distance(candidates[0]);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        Rational mu = average_distance(candidates[i]);
        if (mu < best_mu) {
            best = i;
            best_mu = mu;
        }
    }

    const int k = trace.k();
    Certificate cert;
    cert.kind = out.kind;
    cert.witness = std::move(out.witness);
    cert.n = g.n();
    cert.m = g.m();
    cert.k = k;
    cert.t = trace.t();
    cert.start = trace.start;
    cert.mu = best_mu;
    cert.trace_digest = trace.digest();
    cert.bound = case_bound(cert.kind, k);

    const Rational half_step = Rational(k) + Rational(1, 2);
    if (cert.bound > half_step && k >= 2 && pendant_count(candidates[best]) >= g.n() - 2 * k + 2) {
        cert.kind = CertificateCase::PendantCount;
        cert.bound = half_step;
        cert.witness = std::monostate{};
    }
    return {std::move(candidates[best]), std::move(cert)};
}

} // namespace

Rational case_bound(CertificateCase c, int k)
{
    using formulas::BoundSource;
    using formulas::bound_of;
    if (k < 1) {
        throw InvalidArgument("core size must be positive");
    }
    const Rational half_step = Rational(k) + Rational(1, 2);
    switch (c) {
    case CertificateCase::Star:
        return Rational(2);
    case CertificateCase::PathTrivial:
    case CertificateCase::LeAdd:
    case CertificateCase::Diameter:
    case CertificateCase::PendantCount:
    case CertificateCase::Case1T1:
    case CertificateCase::Case1T2:
    case CertificateCase::Case1ParityAdd:
    case CertificateCase::Case2T3:
        return half_step;
    case CertificateCase::LeExtra:
    case CertificateCase::Case1ParityExtra:
        return bound_of(BoundSource::LeExtra, k).value;
    case CertificateCase::Case2T4:
        return std::min(bound_of(BoundSource::LeFinal2, k).value, Rational(k + 1));
    case CertificateCase::EnlargedIndep:
        return Rational(k) + Rational(3, 2);
    case CertificateCase::ThNewFallback:
        return Rational(k + 1);
    }
    throw InvalidArgument("unknown certificate case");
}

RefineResult refine(const Graph& g, const AttachedTree& attached, const GrowthTrace& trace)
{
    return finish(g, attached, trace, true);
}

RefineResult certify_unrefined(const Graph& g, const AttachedTree& attached, const GrowthTrace& trace)
{
    return finish(g, attached, trace, false);
}

} // namespace spanmu
