#include "spanmu/family.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <utility>

#include "spanmu/error.hpp"
#include "spanmu/oracle.hpp"

namespace spanmu {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 6> kKindNames{{
    {FamilyKind::ExtremalDumbbell, "EXTREMAL_DUMBBELL"},
    {FamilyKind::GnpConnected, "GNP_CONNECTED"},
    {FamilyKind::RandomTreePlusEdges, "RANDOM_TREE_PLUS_EDGES"},
    {FamilyKind::Cycle, "CYCLE"},
    {FamilyKind::Complete, "COMPLETE"},
    {FamilyKind::Path, "PATH"},
}};

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string_view::npos) {
            return out;
        }
        pos = next + 1;
    }
}

std::vector<std::string> required_keys(FamilyKind k)
{
    switch (k) {
    case FamilyKind::ExtremalDumbbell: return {"k", "n"};
    case FamilyKind::GnpConnected: return {"n", "p"};
    case FamilyKind::RandomTreePlusEdges: return {"extra", "n"};
    default: return {"n"};
    }
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Graph gnp_sample(int n, const Rational& p, std::mt19937_64& rng)
{
    auto num = p.numerator().get_ui();
    auto den = p.denominator().get_ui();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (draw(rng, den) < num) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph random_tree_plus_edges(int n, int extra, std::uint64_t seed)
{
    std::mt19937_64 rng(splitmix64(seed));
    std::vector<Edge> edges;
    if (n >= 2) {
        std::vector<int> seq(static_cast<std::size_t>(n - 2));
        for (auto& x : seq) {
            x = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n)));
        }
        edges = prufer_decode(seq).edges();
    }
    auto tree = Graph::from_edge_list(n, edges);
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!tree.has_edge(u, v)) {
                missing.emplace_back(u, v);
            }
        }
    }
    if (extra > static_cast<int>(missing.size())) {
        throw InvalidArgument("too many extra edges for n=" + std::to_string(n));
    }
    for (int i = 0; i < extra; ++i) {
        auto j = static_cast<std::size_t>(i) +
                 static_cast<std::size_t>(draw(rng, missing.size() - static_cast<std::size_t>(i)));
        std::swap(missing[static_cast<std::size_t>(i)], missing[j]);
        edges.push_back(missing[static_cast<std::size_t>(i)]);
    }
    return Graph::from_edge_list(n, edges);
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            edges.emplace_back(std::min(vs[i], vs[j]), std::max(vs[i], vs[j]));
        }
    }
}

} // namespace

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string_view to_string(FamilyKind k)
{
    for (auto [kind, name] : kKindNames) {
        if (kind == k) {
            return name;
        }
    }
    return "UNKNOWN";
}

FamilySpec FamilySpec::parse(std::string_view text)
{
    auto parts = split(text, ':');
    FamilySpec spec;
    auto it = std::find_if(kKindNames.begin(), kKindNames.end(), [&](auto& p) { return p.second == parts[0]; });
    if (it == kKindNames.end()) {
        throw ParseError("unknown family '" + std::string(parts[0]) + "'");
    }
    spec.kind = it->first;
    bool have_seed = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ParseError("expected key=value, got '" + std::string(parts[i]) + "'");
        }
        std::string key(parts[i].substr(0, eq));
        auto value = parts[i].substr(eq + 1);
        if (key == "seed") {
            if (have_seed || i + 1 != parts.size()) {
                throw ParseError("seed must appear once, last");
            }
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), spec.seed);
            if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
                throw ParseError("bad seed '" + std::string(value) + "'");
            }
            have_seed = true;
            continue;
        }
        if (!spec.params.emplace(key, Rational::parse(value)).second) {
            throw ParseError("duplicate key '" + key + "'");
        }
    }
    auto need = required_keys(spec.kind);
    for (const auto& [key, value] : spec.params) {
        if (std::find(need.begin(), need.end(), key) == need.end()) {
            throw ParseError("unexpected key '" + key + "' for " + std::string(to_string(spec.kind)));
        }
    }
    for (const auto& key : need) {
        if (!spec.params.contains(key)) {
            throw ParseError("missing key '" + key + "' for " + std::string(to_string(spec.kind)));
        }
    }
    return spec;
}

std::string FamilySpec::str() const
{
    std::string out(to_string(kind));
    for (const auto& [key, value] : params) {
        out += ":" + key + "=" + (value.is_integer() ? value.num_str() : value.str());
    }
    if (seed != 0) {
        out += ":seed=" + std::to_string(seed);
    }
    return out;
}

int FamilySpec::integer(const std::string& key) const
{
    auto it = params.find(key);
    if (it == params.end()) {
        throw InvalidArgument("missing parameter '" + key + "'");
    }
    if (!it->second.is_integer() || !it->second.numerator().fits_sint_p()) {
        throw InvalidArgument("parameter '" + key + "' must be an integer");
    }
    return static_cast<int>(it->second.numerator().get_si());
}

Rational FamilySpec::rational(const std::string& key) const
{
    auto it = params.find(key);
    if (it == params.end()) {
        throw InvalidArgument("missing parameter '" + key + "'");
    }
    return it->second;
}

Graph extremal_dumbbell(int n, int k)
{
    if (k < 2 || n < 2 * k) {
        throw InvalidArgument("dumbbell needs k >= 2 and n >= 2k");
    }
    const int len = 2 * k - 2;
    const int left = (n - 2 * k) / 2 + 2;
    const int right = (n - 2 * k + 1) / 2 + 2;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < len; ++i) {
        edges.emplace_back(i, i + 1);
    }
    Vertex next = len;
    std::vector<Vertex> a{0};
    for (int i = 1; i < left; ++i) {
        a.push_back(next++);
    }
    std::vector<Vertex> b{len - 1};
    for (int i = 1; i < right; ++i) {
        b.push_back(next++);
    }
    add_clique(edges, a);
    add_clique(edges, b);
    return Graph::from_edge_list(n, edges);
}

Graph generate(const FamilySpec& spec)
{
    const int n = spec.integer("n");
    if (n < 1 || n > 10000) {
        throw InvalidArgument("n out of range");
    }
    std::vector<Edge> edges;
    switch (spec.kind) {
    case FamilyKind::ExtremalDumbbell:
        return extremal_dumbbell(n, spec.integer("k"));
    case FamilyKind::GnpConnected: {
        Rational p = spec.rational("p");
        if (p.sign() <= 0 || p > Rational(1) || !p.denominator().fits_ulong_p()) {
            throw InvalidArgument("p must lie in (0, 1]");
        }
        std::mt19937_64 rng(splitmix64(spec.seed));
        for (int attempt = 0; attempt < 1000; ++attempt) {
            auto g = gnp_sample(n, p, rng);
            if (is_connected(g)) {
                return g;
            }
        }
        throw Error("no connected G(n,p) sample in 1000 attempts");
    }
    case FamilyKind::RandomTreePlusEdges: {
        int extra = spec.integer("extra");
        if (extra < 0) {
            throw InvalidArgument("extra must be non-negative");
        }
        return random_tree_plus_edges(n, extra, spec.seed);
    }
    case FamilyKind::Cycle:
        if (n < 3) {
            throw InvalidArgument("cycle needs n >= 3");
        }
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
        }
        break;
    case FamilyKind::Complete:
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                edges.emplace_back(u, v);
            }
        }
        break;
    case FamilyKind::Path:
        for (int i = 0; i + 1 < n; ++i) {
            edges.emplace_back(i, i + 1);
        }
        break;
    }
    return Graph::from_edge_list(n, edges);
}

} // namespace spanmu
