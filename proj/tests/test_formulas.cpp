#include <doctest.h>

#include <random>

#include "spanmu/error.hpp"
#include "spanmu/formulas.hpp"
#include "spanmu/graph.hpp"
#include "support.hpp"
#include "trees_support.hpp"

using namespace spanmu;
using namespace spanmu::formulas;
using namespace testing;

TEST_CASE("pendant bound")
{
    CHECK(pendant_bound(4, 2) == Rational(10));
    CHECK(pendant_bound(7, 4) == Rational(48));
    CHECK(pendant_bound(10, 3) < pendant_bound(10, 2));
    CHECK_THROWS_AS(pendant_bound(3, 1), InvalidArgument);
    CHECK_THROWS_AS(pendant_bound(6, 5), InvalidArgument);
    for (int n = 4; n <= 50; ++n) {
        for (int p = 1; p + 1 <= n - 2; ++p) {
            CHECK(pendant_bound(n, p + 1) < pendant_bound(n, p));
        }
    }
}

TEST_CASE("tab bound in both forms")
{
    CHECK(tab_bound(3, 4) == Rational(48));
    CHECK(tab_bound(2, 2) == Rational(10));
    CHECK(tab_bound(2, 6) == Rational(58));
    CHECK(tab_bound_eq(7, 3) == Rational(48));
    CHECK(tab_bound_eq(4, 2) == Rational(10));
    CHECK(tab_bound_eq(10, 3) < tab_bound_eq(10, 4));
    for (int n = 3; n <= 100; ++n) {
        for (int t = 2; t <= n - 1; ++t) {
            CHECK(tab_bound_eq(n, t) == tab_bound(t, n - t));
        }
    }
    for (int n = 3; n <= 50; ++n) {
        for (int t = 2; t + 1 <= n - 1; ++t) {
            CHECK(tab_bound_eq(n, t) < tab_bound_eq(n, t + 1));
        }
    }
    for (int a = 2; a <= 12; ++a) {
        for (int b = 2; b <= 12; b += 2) {
            CHECK(tab_bound(a, b) == Rational(brute_wiener(h_ab(a, b))));
        }
    }
    CHECK_THROWS_AS(tab_bound(1, 3), InvalidArgument);
}

TEST_CASE("f2k2 is the tab bound at t = 2k - 2")
{
    CHECK(f2k2(8, 2) == tab_bound_eq(8, 2));
    CHECK(f2k2(8, 2) == Rational(58));
    for (int k = 2; k <= 10; ++k) {
        for (int n = 2 * k - 1; n <= 60; ++n) {
            CHECK(f2k2(n, k) == tab_bound_eq(n, 2 * k - 2));
            Rational mu_gap = f2k2(n, k) / Rational(pair_count(n)) - Rational(k);
            Rational expr(-8 * k * k * k + 36 * k * k - 2 * (9 * n + 14) * k + 3 * n * n + 12 * n,
                          6 * n * (n - 1));
            CHECK(mu_gap == expr);
        }
    }
}

TEST_CASE("double broom closed form")
{
    CHECK(w_doublebroom(6, 2, 1, 1) == Rational(35));
    CHECK(brute_wiener(double_broom(6, 2, 1, 1)) == 35);
    CHECK(w_doublebroom(7, 2, 1, 1) == Rational(brute_wiener(double_broom(7, 2, 1, 1))));
    CHECK(w_doublebroom(7, 2, 2, 1) == Rational(brute_wiener(double_broom(7, 2, 2, 1))));
    CHECK_THROWS_AS(w_doublebroom(6, 2, 2, 1), InvalidArgument);
    for (int n = 6; n <= 16; ++n) {
        for (int k = 2; 2 * k + 2 <= n; ++k) {
            for (int a = 1; a <= n - 2 * k - 1; ++a) {
                for (int b = 1; a + b <= n - 2 * k; ++b) {
                    CHECK(w_doublebroom(n, k, a, b) == Rational(brute_wiener(double_broom(n, k, a, b))));
                }
            }
        }
    }
    CHECK_THROWS_AS(w_doublebroom(6, 2, 2, 2), InvalidArgument);
}

TEST_CASE("spider closed form")
{
    CHECK(w_spider(10, 4, 1, 1, 1) == Rational(138));
    CHECK(brute_wiener(spider_tree(10, 4, 1, 1, 1)) == 138);
    CHECK(w_spider(9, 4, 0, 1, 1) == Rational(brute_wiener(spider_tree(9, 4, 0, 1, 1))));
    CHECK(w_spider(10, 4, 1, 2, 0) == Rational(brute_wiener(spider_tree(10, 4, 1, 2, 0))));
    for (int n = 8; n <= 16; ++n) {
        for (int k = 4; 2 * k - 1 <= n; ++k) {
            int rest = n - 2 * k + 1;
            for (int a = 0; a <= rest; ++a) {
                for (int b = 0; a + b <= rest; ++b) {
                    int c = rest - a - b;
                    CHECK(w_spider(n, k, a, b, c) == Rational(brute_wiener(spider_tree(n, k, a, b, c))));
                }
            }
        }
    }
    CHECK_THROWS_AS(w_spider(10, 3, 1, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(w_spider(10, 4, 1, 1, 2), InvalidArgument);
}

TEST_CASE("spider maximized over its pendant split stays below the extra bound")
{
    for (int k = 4; k <= 9; ++k) {
        for (int n = 2 * k; n <= 40; ++n) {
            Rational cap = bound_of(BoundSource::LeExtra, k).value * Rational(pair_count(n));
            int rest = n - 2 * k + 1;
            Rational best(0);
            for (int b = 0; b <= rest; ++b) {
                for (int c = 0; b + c <= rest; ++c) {
                    best = std::max(best, w_spider(n, k, rest - b - c, b, c));
                }
            }
            CHECK(best < cap);
        }
    }
}

TEST_CASE("bound catalog")
{
    CHECK(bound_of(BoundSource::Th1, 7).value == Rational(783, 98));
    CHECK(bound_of(BoundSource::LeExtra, 4).value == Rational(14, 3));
    CHECK(bound_of(BoundSource::Th1, 6).value == Rational(7));
    CHECK(bound_of(BoundSource::Th1, 1).value == Rational(2));
    CHECK(bound_of(BoundSource::LeAdd, 3).value == Rational(7, 2));
    CHECK(bound_of(BoundSource::Diameter, 3).value == Rational(7, 2));
    CHECK(bound_of(BoundSource::ThNew, 3).value == Rational(4));
    CHECK(bound_of(BoundSource::LeFinal2, 2).value == Rational(7, 2));
    CHECK(bound_of(BoundSource::LeFinal2, 7).value == Rational(783, 98));
    CHECK(bound_of(BoundSource::Th1, 9).source == BoundSource::Th1);
    CHECK(th1_bound(8) == Rational(8) + Rational(1, 2) + Rational(28, 64));
    CHECK_THROWS_AS(bound_of(BoundSource::LeExtra, 3), InvalidArgument);
    CHECK_THROWS_AS(bound_of(BoundSource::Pendant, 3), InvalidArgument);
    for (int a = 7; a <= 40; ++a) {
        CHECK(th1_bound(a) < Rational(a + 1));
    }
}

TEST_CASE("dumbbell gap")
{
    CHECK(dumbbell_gap(1000, 4) == Rational(2939952, 5994000));
    CHECK(dumbbell_gap(8, 2) == Rational(1, 14));
    Rational diff = dumbbell_gap(1000, 4) - Rational(1, 2);
    CHECK(diff < Rational(1, 100));
    CHECK(-diff < Rational(1, 100));
    for (int k = 2; k <= 6; ++k) {
        for (int n = 2 * k; n <= 40; ++n) {
            Rational exact = average_distance(h_ab(2 * k - 2, n - 2 * k + 2)) - Rational(k);
            if (n % 2 == 0) {
                CHECK(dumbbell_gap(n, k) == exact);
            } else {
                CHECK(dumbbell_gap(n, k) > exact);
            }
        }
    }
}

TEST_CASE("mu gap in alpha")
{
    CHECK(mu_gap_alpha(4, 1) == Rational(1, 2));
    CHECK(mu_gap_alpha(2, 1) == Rational(0));
    for (int a = 1; a < 10; ++a) {
        CHECK(mu_gap_alpha(20, a + 1) < mu_gap_alpha(20, a));
    }
    CHECK_THROWS_AS(mu_gap_alpha(3, 2), InvalidArgument);
}

TEST_CASE("W formulas are attained by H_{a,b} exactly when b is even")
{
    for (int n = 4; n <= 30; ++n) {
        for (int p = 2; p <= n - 2; ++p) {
            Rational w(brute_wiener(h_ab(n - p, p)));
            if (p % 2 == 0) {
                CHECK(pendant_bound(n, p) == w);
                CHECK(pendant_bound(n, p).is_integer());
            } else {
                CHECK(pendant_bound(n, p) > w);
            }
        }
        for (int t = 2; t <= n - 2; ++t) {
            Rational w(brute_wiener(h_ab(t, n - t)));
            if ((n - t) % 2 == 0) {
                CHECK(tab_bound_eq(n, t) == w);
            } else {
                CHECK(tab_bound_eq(n, t) > w);
            }
        }
    }
}
