#include "spanmu/formulas.hpp"

#include <string>

#include "spanmu/error.hpp"

namespace spanmu::formulas {

namespace {

using Z = BigInt;

Z z(int v) { return Z(v); }

void require(bool ok, const char* what)
{
    if (!ok) {
        throw InvalidArgument(what);
    }
}

Rational over(const Z& num, const Z& den) { return Rational(num, den); }

} // namespace

std::string_view to_string(BoundSource s)
{
    switch (s) {
    case BoundSource::Pendant: return "PENDANT";
    case BoundSource::Tab: return "TAB";
    case BoundSource::TabEq: return "TAB_EQ";
    case BoundSource::F2k2: return "F2K2";
    case BoundSource::LeAdd: return "LE_ADD";
    case BoundSource::Diameter: return "DIAMETER";
    case BoundSource::LeFinal2: return "LE_FINAL_2";
    case BoundSource::LeExtra: return "LE_EXTRA";
    case BoundSource::ThNew: return "TH_NEW";
    case BoundSource::Th1: return "TH_1";
    case BoundSource::DumbbellGap: return "DUMBBELL_GAP";
    case BoundSource::MuGapAlpha: return "MU_GAP_ALPHA";
    }
    return "?";
}

Rational pendant_bound(int n, int p)
{
    require(n >= 4 && p >= 1 && p <= n - 2, "pendant_bound needs n >= 4 and 1 <= p <= n - 2");
    Z N = z(n), P = z(p);
    Z num = 2 * N * N * N - (3 * P * P - 6 * P + 2) * N + P * P * P + 3 * P * P - 10 * P;
    return over(num, 12);
}

Rational tab_bound(int a, int b)
{
    require(a >= 2 && b >= 1, "tab_bound needs a >= 2 and b >= 1");
    Z A = z(a), B = z(b);
    Z num = 2 * A * A * A + 6 * A * A * B + 3 * A * B * B + 6 * A * B - 2 * A + 9 * B * B - 12 * B;
    return over(num, 12);
}

Rational tab_bound_eq(int n, int t)
{
    require(t >= 2 && t <= n - 1, "tab_bound_eq needs 2 <= t <= n - 1");
    Z N = z(n), T = z(t);
    Z num = -T * T * T + 3 * T * T + (3 * N * N - 12 * N + 10) * T + 9 * N * N - 12 * N;
    return over(num, 12);
}

Rational f2k2(int n, int k)
{
    require(k >= 2 && 2 * k - 2 <= n - 1, "f2k2 needs k >= 2 and 2k - 2 <= n - 1");
    Z N = z(n), K = z(k);
    Z num = -8 * K * K * K + 36 * K * K + 2 * (3 * N * N - 12 * N - 14) * K + 3 * N * N + 12 * N;
    return over(num, 12);
}

Rational w_doublebroom(int n, int k, int a, int b)
{
    require(k >= 2 && a >= 1 && b >= 1 && a + b <= n - 2 * k,
            "w_doublebroom needs k >= 2, a, b >= 1 and a + b <= n - 2k");
    Z N = z(n), A = z(a), B = z(b);
    Z w = (N - 1) * (N - 1) + A * (N - A - 2) + (A + 1) * (N - A - 3);
    for (int i = 0; i <= 2 * k - 4; ++i) {
        Z I = z(i);
        w += (B + I) * (N - B - I - 2);
    }
    return Rational(w);
}

Rational w_spider(int n, int k, int a, int b, int c)
{
    require(k >= 4, "w_spider needs k >= 4");
    require(a >= 0 && b >= 0 && c >= 0 && a + b + c == n - 2 * k + 1,
            "w_spider needs a, b, c >= 0 with a + b + c = n - 2k + 1");
    Z N = z(n), A = z(a), B = z(b), C = z(c);
    Z w = (N - 1) * (N - 1);
    for (int i = 0; i <= 2 * k - 7; ++i) {
        Z I = z(i);
        w += (A + I) * (N - A - I - 2);
    }
    w += B * (N - B - 2) + (B + 1) * (N - B - 3);
    w += C * (N - C - 2) + (C + 1) * (N - C - 3);
    return Rational(w);
}

BoundValue bound_of(BoundSource source, int k)
{
    const Rational half(1, 2);
    switch (source) {
    case BoundSource::LeAdd:
    case BoundSource::Diameter:
        require(k >= 1, "bound needs k >= 1");
        return {Rational(k) + half, source};
    case BoundSource::LeFinal2:
        require(k >= 1, "bound needs k >= 1");
        return {Rational(k) + half + Rational(4 * (k - 1), std::int64_t{k} * k), source};
    case BoundSource::LeExtra:
        require(k >= 4, "LE_EXTRA bound needs k >= 4");
        return {Rational(k) + half + Rational(1, 2 * (2 * k - 5)), source};
    case BoundSource::ThNew:
        require(k >= 1, "bound needs alpha >= 1");
        return {Rational(k + 1), source};
    case BoundSource::Th1:
        require(k >= 1, "bound needs alpha >= 1");
        if (k <= 6) {
            return {Rational(k + 1), source};
        }
        return {Rational(k) + half + Rational(4 * (k - 1), std::int64_t{k} * k), source};
    default:
        throw InvalidArgument(std::string("bound_of: ") + std::string(to_string(source)) +
                              " is not an average-distance bound");
    }
}

Rational dumbbell_gap(int n, int k)
{
    require(k >= 2 && n >= 2 * k, "dumbbell_gap needs k >= 2 and n >= 2k");
    Z N = z(n), K = z(k);
    Z num = -8 * K * K * K + 36 * K * K - 2 * (9 * N + 14) * K + 3 * N * N + 12 * N;
    return over(num, 6 * N * (N - 1));
}

Rational mu_gap_alpha(int n, int alpha)
{
    require(alpha >= 1 && n >= 2 * alpha, "mu_gap_alpha needs alpha >= 1 and n >= 2 alpha");
    Z N = z(n), A = z(alpha);
    Z num = -4 * A * A * A + 12 * A * A - (9 * N - 1) * A + 3 * N * N - 3;
    return over(num, 3 * N * (N - 1));
}

} // namespace spanmu::formulas
