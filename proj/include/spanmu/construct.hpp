#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spanmu/graph.hpp"
#include "spanmu/rational.hpp"
#include "spanmu/tree.hpp"

namespace spanmu {

/// One growth step: x joins the independent core through the path x z y.
struct GrowthStep {
    Vertex x = -1;
    Vertex z = -1;
    Vertex y = -1;
    bool z_was_new = false;
};

/// Record of growing the dominating base tree from `start`.
///
/// `core` is independent in G, every vertex outside `base` has a neighbor in
/// `core`, and |base| <= 2|core| - 1.
struct GrowthTrace {
    Vertex start = -1;
    std::vector<GrowthStep> steps;
    std::vector<Vertex> core;       ///< the independent set A, in insertion order
    std::vector<Vertex> base;       ///< base tree vertices, sorted
    std::vector<Edge> base_edges;   ///< edges of the base tree

    [[nodiscard]] int k() const { return static_cast<int>(core.size()); }
    [[nodiscard]] int t() const { return static_cast<int>(base.size()); }

    /// 64-bit FNV-1a over the start and steps, as 16 hex digits.
    [[nodiscard]] std::string digest() const;
};

/// Throws DisconnectedGraph or InvalidArgument (bad start); InternalError if
/// the domination property fails at exhaustion.
GrowthTrace grow_dominating_tree(const Graph& g, Vertex start);

struct AttachedTree {
    Tree tree;
    Decomposition decomposition;
};

/// Hangs every vertex outside the base on the core neighbor closest (by
/// distance sum within the base tree) to the rest of the base.
AttachedTree attach_pendants(const Graph& g, const GrowthTrace& trace);

enum class CertificateCase {
    Star,
    PathTrivial,
    LeAdd,
    LeExtra,
    Diameter,
    PendantCount,
    Case1T1,
    Case1T2,
    Case1ParityAdd,
    Case1ParityExtra,
    Case2T3,
    Case2T4,
    EnlargedIndep,
    ThNewFallback,
};

std::string_view to_string(CertificateCase c);
std::optional<CertificateCase> parse_certificate_case(std::string_view name);

struct SwappedEdge {
    Edge removed;
    Edge added;
    friend bool operator==(const SwappedEdge&, const SwappedEdge&) = default;
};

struct IndependentSetWitness {
    std::vector<Vertex> vertices;
    friend bool operator==(const IndependentSetWitness&, const IndependentSetWitness&) = default;
};

using Witness = std::variant<std::monostate, IndependentSetWitness, SwappedEdge>;

/// Machine-checkable claim mu(tree) < bound, with the case that justifies it.
struct Certificate {
    CertificateCase kind = CertificateCase::ThNewFallback;
    int n = 0;
    int m = 0;
    int k = 0; ///< |A|, size of the independent core
    int t = 0; ///< order of the base tree
    Vertex start = -1;
    Rational bound;
    Rational mu;
    Witness witness;
    std::string trace_digest;
};

/// The bound a certificate of case `c` carries at core size k.
Rational case_bound(CertificateCase c, int k);

struct RefineResult {
    Tree tree;
    Certificate certificate;
};

/// Runs the case analysis on the attached tree and returns the best tree
/// found together with the certificate of the case that applied.
RefineResult refine(const Graph& g, const AttachedTree& attached, const GrowthTrace& trace);

/// Same case analysis, but no tree transformations: cases that need one fall
/// back to the alpha + 1 bound.
RefineResult certify_unrefined(const Graph& g, const AttachedTree& attached, const GrowthTrace& trace);

struct BuildOptions {
    std::optional<Vertex> start; ///< nullopt: try every start vertex
    bool refine = true;
};

struct BuildResult {
    Tree tree;
    Certificate certificate;
    GrowthTrace trace;
};

/// Grow, attach and refine from each requested start; keep the smallest mu
/// (ties: smallest start). Throws DisconnectedGraph, InvalidArgument (n < 2).
BuildResult build_spanning_tree(const Graph& g, const BuildOptions& opts = {});

enum class VerifyReason {
    Ok,
    SizeMismatch,
    NotSpanningTree,
    MuMismatch,
    BoundMismatch,
    BoundNotAboveMu,
    PendantCountTooLow,
    WitnessMissing,
    WitnessOutOfRange,
    WitnessNotIndependent,
    WitnessWrongSize,
    WitnessEdgeMissing,
    TraceMismatch,
    KExceedsAlpha,
    BoundExceedsTheorem,
};

std::string_view to_string(VerifyReason r);

struct VerifyOutcome {
    VerifyReason reason = VerifyReason::Ok;
    std::string detail;
    [[nodiscard]] bool ok() const { return reason == VerifyReason::Ok; }
    explicit operator bool() const { return ok(); }
};

/// Re-checks everything the certificate claims. With `alpha`, also checks
/// the claim against the refined theorem bound at alpha.
VerifyOutcome verify_certificate(const Graph& g, const Tree& tree, const Certificate& cert,
                                 std::optional<int> alpha = std::nullopt);

} // namespace spanmu
