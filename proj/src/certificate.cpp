#include <algorithm>
#include <array>
#include <utility>

#include "spanmu/construct.hpp"
#include "spanmu/error.hpp"
#include "spanmu/formulas.hpp"

namespace spanmu {

namespace {

constexpr std::array<std::pair<CertificateCase, std::string_view>, 14> kCaseNames{{
    {CertificateCase::Star, "STAR"},
    {CertificateCase::PathTrivial, "PATH_TRIVIAL"},
    {CertificateCase::LeAdd, "LE_ADD"},
    {CertificateCase::LeExtra, "LE_EXTRA"},
    {CertificateCase::Diameter, "DIAMETER"},
    {CertificateCase::PendantCount, "PENDANT_COUNT"},
    {CertificateCase::Case1T1, "CASE1_T1"},
    {CertificateCase::Case1T2, "CASE1_T2"},
    {CertificateCase::Case1ParityAdd, "CASE1_PARITY_ADD"},
    {CertificateCase::Case1ParityExtra, "CASE1_PARITY_EXTRA"},
    {CertificateCase::Case2T3, "CASE2_T3"},
    {CertificateCase::Case2T4, "CASE2_T4"},
    {CertificateCase::EnlargedIndep, "ENLARGED_INDEP"},
    {CertificateCase::ThNewFallback, "TH_NEW_FALLBACK"},
}};

bool needs_swap_witness(CertificateCase c)
{
    switch (c) {
    case CertificateCase::Case1T1:
    case CertificateCase::Case1T2:
    case CertificateCase::Case1ParityAdd:
    case CertificateCase::Case1ParityExtra:
    case CertificateCase::Case2T4:
        return true;
    default:
        return false;
    }
}

VerifyOutcome fail(VerifyReason r, std::string detail) { return {r, std::move(detail)}; }

VerifyOutcome check_witness(const Graph& g, const Certificate& cert)
{
    if (cert.kind == CertificateCase::EnlargedIndep &&
        !std::holds_alternative<IndependentSetWitness>(cert.witness)) {
        return fail(VerifyReason::WitnessMissing, "enlarged case needs an independent set");
    }
    if (needs_swap_witness(cert.kind) && !std::holds_alternative<SwappedEdge>(cert.witness)) {
        return fail(VerifyReason::WitnessMissing, "case needs a swapped edge");
    }

    if (const auto* set = std::get_if<IndependentSetWitness>(&cert.witness)) {
        for (Vertex v : set->vertices) {
            if (!g.contains(v)) {
                return fail(VerifyReason::WitnessOutOfRange, "vertex " + std::to_string(v));
            }
        }
        auto sorted = set->vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return fail(VerifyReason::WitnessWrongSize, "repeated vertex in witness");
        }
        if (!is_independent_set(g, sorted)) {
            return fail(VerifyReason::WitnessNotIndependent, "witness contains an edge");
        }
        if (cert.kind == CertificateCase::EnlargedIndep && static_cast<int>(sorted.size()) != cert.k + 1) {
            return fail(VerifyReason::WitnessWrongSize,
                        "expected " + std::to_string(cert.k + 1) + ", got " + std::to_string(sorted.size()));
        }
    } else if (const auto* sw = std::get_if<SwappedEdge>(&cert.witness)) {
        for (Edge e : {sw->removed, sw->added}) {
            if (!g.contains(e.first) || !g.contains(e.second)) {
                return fail(VerifyReason::WitnessOutOfRange, "swapped edge endpoint out of range");
            }
            if (!g.has_edge(e.first, e.second)) {
                return fail(VerifyReason::WitnessEdgeMissing, "edge (" + std::to_string(e.first) + "," +
                                                                  std::to_string(e.second) + ") not in graph");
            }
        }
    }
    return {};
}

} // namespace

std::string_view to_string(CertificateCase c)
{
    for (auto [k, name] : kCaseNames) {
        if (k == c) {
            return name;
        }
    }
    return "UNKNOWN";
}

std::optional<CertificateCase> parse_certificate_case(std::string_view name)
{
    for (auto [k, s] : kCaseNames) {
        if (s == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view to_string(VerifyReason r)
{
    switch (r) {
    case VerifyReason::Ok: return "ok";
    case VerifyReason::SizeMismatch: return "size-mismatch";
    case VerifyReason::NotSpanningTree: return "not-spanning-tree";
    case VerifyReason::MuMismatch: return "mu-mismatch";
    case VerifyReason::BoundMismatch: return "bound-mismatch";
    case VerifyReason::BoundNotAboveMu: return "bound-not-above-mu";
    case VerifyReason::PendantCountTooLow: return "pendant-count-too-low";
    case VerifyReason::WitnessMissing: return "witness-missing";
    case VerifyReason::WitnessOutOfRange: return "witness-out-of-range";
    case VerifyReason::WitnessNotIndependent: return "witness-not-independent";
    case VerifyReason::WitnessWrongSize: return "witness-wrong-size";
    case VerifyReason::WitnessEdgeMissing: return "witness-edge-missing";
    case VerifyReason::TraceMismatch: return "trace-mismatch";
    case VerifyReason::KExceedsAlpha: return "k-exceeds-alpha";
    case VerifyReason::BoundExceedsTheorem: return "bound-exceeds-theorem";
    }
    return "unknown";
}

VerifyOutcome verify_certificate(const Graph& g, const Tree& tree, const Certificate& cert, std::optional<int> alpha)
{
    if (cert.n != g.n() || cert.m != g.m() || tree.n() != g.n()) {
        return fail(VerifyReason::SizeMismatch, "certificate is for n=" + std::to_string(cert.n) +
                                                    ", m=" + std::to_string(cert.m));
    }
    if (!is_spanning_tree_of(tree, g)) {
        return fail(VerifyReason::NotSpanningTree, "tree is not a spanning tree of the graph");
    }
    if (g.n() < 2) {
        return fail(VerifyReason::SizeMismatch, "graph has fewer than two vertices");
    }
    Rational mu = average_distance(tree);
    if (mu != cert.mu) {
        return fail(VerifyReason::MuMismatch, "recomputed mu " + mu.str() + " != " + cert.mu.str());
    }
    if (cert.k < 1 || cert.t < 1 || cert.k > g.n()) {
        return fail(VerifyReason::BoundMismatch, "invalid core size");
    }
    Rational expected;
    try {
        expected = case_bound(cert.kind, cert.k);
    } catch (const InvalidArgument& e) {
        return fail(VerifyReason::BoundMismatch, e.what());
    }
    if (cert.bound != expected) {
        return fail(VerifyReason::BoundMismatch, "case " + std::string(to_string(cert.kind)) + " at k=" +
                                                     std::to_string(cert.k) + " carries " + expected.str());
    }
    if (!(mu < cert.bound)) {
        return fail(VerifyReason::BoundNotAboveMu, mu.str() + " >= " + cert.bound.str());
    }
    if (cert.kind == CertificateCase::PendantCount && pendant_count(tree) < g.n() - 2 * cert.k + 2) {
        return fail(VerifyReason::PendantCountTooLow, "tree has " + std::to_string(pendant_count(tree)) + " pendants");
    }
    if (auto w = check_witness(g, cert); !w) {
        return w;
    }

    if (!g.contains(cert.start)) {
        return fail(VerifyReason::TraceMismatch, "start vertex out of range");
    }
    auto trace = grow_dominating_tree(g, cert.start);
    if (trace.k() != cert.k || trace.t() != cert.t || trace.digest() != cert.trace_digest) {
        return fail(VerifyReason::TraceMismatch, "growth from " + std::to_string(cert.start) + " gives digest " +
                                                     trace.digest());
    }

    if (alpha) {
        int need = cert.kind == CertificateCase::EnlargedIndep ? cert.k + 1 : cert.k;
        if (need > *alpha) {
            return fail(VerifyReason::KExceedsAlpha, "independent core of size " + std::to_string(need) +
                                                         " exceeds alpha " + std::to_string(*alpha));
        }
        if (cert.bound > formulas::th1_bound(*alpha)) {
            return fail(VerifyReason::BoundExceedsTheorem, "bound " + cert.bound.str() + " exceeds " +
                                                               formulas::th1_bound(*alpha).str());
        }
    }
    return {};
}

} // namespace spanmu
