#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "spanmu/graph.hpp"
#include "spanmu/rational.hpp"

namespace spanmu {

enum class FamilyKind {
    ExtremalDumbbell,
    GnpConnected,
    RandomTreePlusEdges,
    Cycle,
    Complete,
    Path,
};

std::string_view to_string(FamilyKind k);

/// Graph family with parameters, e.g. "GNP_CONNECTED:n=12:p=1/4:seed=3".
///
/// Keys per kind: EXTREMAL_DUMBBELL n, k; GNP_CONNECTED n, p;
/// RANDOM_TREE_PLUS_EDGES n, extra; CYCLE, COMPLETE, PATH n.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    std::map<std::string, Rational> params;
    std::uint64_t seed = 0;

    /// Grammar KIND(:key=value)*(:seed=UINT)?; throws ParseError.
    static FamilySpec parse(std::string_view text);

    /// Canonical text form; keys sorted, seed last and only if nonzero.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] int integer(const std::string& key) const;
    [[nodiscard]] Rational rational(const std::string& key) const;
    [[nodiscard]] bool randomized() const
    {
        return kind == FamilyKind::GnpConnected || kind == FamilyKind::RandomTreePlusEdges;
    }
};

/// Deterministic in the spec. Throws InvalidArgument for infeasible
/// parameters and Error when no connected G(n,p) sample turns up.
Graph generate(const FamilySpec& spec);

/// Path P_{2k-2} with a clique on floor((n-2k)/2)+2 vertices glued at one end
/// and one on ceil((n-2k)/2)+2 vertices at the other. Path ids come first.
Graph extremal_dumbbell(int n, int k);

std::uint64_t splitmix64(std::uint64_t x);

} // namespace spanmu
