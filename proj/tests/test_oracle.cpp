#include <doctest.h>

#include <random>
#include <set>

#include "spanmu/construct.hpp"
#include "spanmu/error.hpp"
#include "spanmu/family.hpp"
#include "spanmu/formulas.hpp"
#include "spanmu/mis.hpp"
#include "spanmu/oracle.hpp"
#include "support.hpp"

using namespace spanmu;
using namespace testing;

TEST_CASE("spanning tree enumeration counts")
{
    CHECK(spanning_trees(complete_graph(4)).size() == 16);
    CHECK(spanning_trees(cycle_graph(5)).size() == 5);
    CHECK(spanning_trees(path_graph(4)).size() == 1);
    CHECK(kirchhoff_count(complete_graph(6)) == 1296);
    CHECK(kirchhoff_count(make_graph(1, {})) == 1);
    CHECK(kirchhoff_count(make_graph(3, {{0, 1}})) == 0);
    CHECK_THROWS_AS(spanning_trees(complete_graph(6), 100), CapExceeded);
    CHECK_THROWS_AS(spanning_trees(make_graph(3, {{0, 1}})), DisconnectedGraph);
}

TEST_CASE("enumeration matches the matrix-tree count and yields distinct valid trees")
{
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        auto g = random_connected(n, 1 + static_cast<int>(rng() % 3), 4, rng);
        auto trees = spanning_trees(g);
        CHECK(BigInt(static_cast<unsigned long>(trees.size())) == kirchhoff_count(g));
        std::set<std::vector<Edge>> distinct;
        for (const auto& t : trees) {
            CHECK(is_spanning_tree_of(t, g));
            distinct.insert(t.edges());
        }
        CHECK(distinct.size() == trees.size());
    }
}

TEST_CASE("mrct examples")
{
    auto k4 = mrct(complete_graph(4));
    CHECK(k4.mu == Rational(3, 2));
    CHECK(k4.trees == 16);
    CHECK(canonical_form(k4.tree) == canonical_form(Tree::from_graph(star_graph(4))));

    auto c5 = mrct(cycle_graph(5));
    CHECK(c5.mu == Rational(2));

    auto db = mrct(extremal_dumbbell(8, 2));
    CHECK(db.mu == Rational(29, 14));
    CHECK(wiener_index(h_ab(2, 6)) == 58);
    CHECK(average_distance(h_ab(2, 6)) == Rational(29, 14));
}

TEST_CASE("constructed trees never beat the optimum")
{
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 80; ++iter) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto g = random_connected(n, 1, 3, rng);
        auto best = mrct(g);
        auto built = build_spanning_tree(g);
        int alpha = independence_number(g);
        CHECK(best.mu <= built.certificate.mu);
        CHECK(built.certificate.mu < formulas::th1_bound(alpha));
        CHECK(best.mu == average_distance(best.tree));
    }
}

TEST_CASE("labeled trees and Prüfer codes")
{
    CHECK(all_labeled_trees(1).size() == 1);
    CHECK(all_labeled_trees(2).size() == 1);
    CHECK(all_labeled_trees(3).size() == 3);
    CHECK(all_labeled_trees(4).size() == 16);
    CHECK(all_labeled_trees(5).size() == 125);
    CHECK_THROWS_AS(all_labeled_trees(0), InvalidArgument);
    CHECK_THROWS_AS(all_labeled_trees(10), InvalidArgument);

    for (int n = 2; n <= 7; ++n) {
        std::set<std::vector<Edge>> distinct;
        for_each_labeled_tree(n, [&](const Tree& t) {
            distinct.insert(t.edges());
            auto code = prufer_encode(t);
            CHECK(static_cast<int>(code.size()) == n - 2);
            CHECK(prufer_decode(code) == t);
        });
        std::size_t cayley = 1;
        for (int i = 0; i < n - 2; ++i) {
            cayley *= static_cast<std::size_t>(n);
        }
        CHECK(distinct.size() == cayley);
    }
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 200; ++iter) {
        auto t = random_tree(2 + static_cast<int>(rng() % 8), rng);
        CHECK(prufer_decode(prufer_encode(t)) == t);
    }
    CHECK_THROWS_AS(prufer_decode(std::vector<int>{5}), InvalidArgument);
}

TEST_CASE("family specs")
{
    auto s = FamilySpec::parse("GNP_CONNECTED:n=12:p=1/4:seed=9");
    CHECK(s.kind == FamilyKind::GnpConnected);
    CHECK(s.integer("n") == 12);
    CHECK(s.rational("p") == Rational(1, 4));
    CHECK(s.seed == 9);
    CHECK(s.str() == "GNP_CONNECTED:n=12:p=1/4:seed=9");
    CHECK(FamilySpec::parse("EXTREMAL_DUMBBELL:n=8:k=2").str() == "EXTREMAL_DUMBBELL:k=2:n=8");

    CHECK_THROWS_AS(FamilySpec::parse("NOPE:n=3"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("CYCLE"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("CYCLE:n=5:m=3"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("CYCLE:n=5:n=6"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("CYCLE:seed=1:n=5"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("CYCLE:n=x"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("CYCLE:n=5:seed=-1"), ParseError);
    CHECK_THROWS_AS(generate(FamilySpec::parse("CYCLE:n=2")), InvalidArgument);
    CHECK_THROWS_AS(generate(FamilySpec::parse("PATH:n=5/2")), InvalidArgument);
    CHECK_THROWS_AS(generate(FamilySpec::parse("EXTREMAL_DUMBBELL:n=7:k=4")), InvalidArgument);
    CHECK_THROWS_AS(generate(FamilySpec::parse("GNP_CONNECTED:n=5:p=3/2")), InvalidArgument);
}

TEST_CASE("generators")
{
    auto db = generate(FamilySpec::parse("EXTREMAL_DUMBBELL:n=8:k=2"));
    CHECK(db.n() == 8);
    CHECK(db.m() == 13);
    CHECK(generate(FamilySpec::parse("COMPLETE:n=4")).m() == 6);
    CHECK(generate(FamilySpec::parse("CYCLE:n=5")).m() == 5);
    CHECK(generate(FamilySpec::parse("PATH:n=4")).m() == 3);
    CHECK(independence_number(generate(FamilySpec::parse("EXTREMAL_DUMBBELL:n=20:k=4"))) == 4);

    for (int k = 2; k <= 7; ++k) {
        for (int n = 2 * k; n <= 2 * k + 9; ++n) {
            auto g = extremal_dumbbell(n, k);
            CHECK(g.n() == n);
            CHECK(is_connected(g));
            CHECK(independence_number(g) == k);
        }
    }

    auto a = generate(FamilySpec::parse("GNP_CONNECTED:n=12:p=1/4:seed=5"));
    auto b = generate(FamilySpec::parse("GNP_CONNECTED:n=12:p=1/4:seed=5"));
    auto c = generate(FamilySpec::parse("GNP_CONNECTED:n=12:p=1/4:seed=6"));
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
    CHECK(is_connected(a));

    auto r = generate(FamilySpec::parse("RANDOM_TREE_PLUS_EDGES:n=10:extra=4:seed=2"));
    CHECK(r.m() == 13);
    CHECK(is_connected(r));
    CHECK_THROWS_AS(generate(FamilySpec::parse("RANDOM_TREE_PLUS_EDGES:n=4:extra=4")), InvalidArgument);
}

TEST_CASE("dumbbell optimum is the double broom")
{
    for (int k = 2; k <= 3; ++k) {
        for (int n = 2 * k; n <= 11; ++n) {
            auto best = mrct(extremal_dumbbell(n, k));
            CHECK(best.mu == average_distance(h_ab(2 * k - 2, n - 2 * k + 2)));
        }
    }
}
