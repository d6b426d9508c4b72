#pragma once

#include <string_view>

#include "spanmu/rational.hpp"

/// Closed-form Wiener-index expressions and average-distance bounds.
///
/// Everything is exact. W-formulas return Rational even where the value is an
/// integer; callers that need integrality assert it themselves.
namespace spanmu::formulas {

enum class BoundSource {
    Pendant,     ///< W bound by order and pendant count
    Tab,         ///< W bound over T_{a,b}
    TabEq,       ///< same bound in (n, t) form
    F2k2,        ///< TabEq at t = 2k - 2
    LeAdd,       ///< mu < k + 1/2 for T_{t,n-t}, t <= 2k - 2
    Diameter,    ///< mu < k + 1/2 for P_{2k-1}-based trees of small diameter
    LeFinal2,    ///< mu < k + 1/2 + 4(k-1)/k^2
    LeExtra,     ///< mu < k + 1/2 + 1/(2(2k-5))
    ThNew,       ///< mu < alpha + 1
    Th1,         ///< piecewise refined bound
    DumbbellGap, ///< mu(H_{2k-2,n-2k+2}) - k
    MuGapAlpha,  ///< worst-case mu - alpha over T_{2alpha-1, n-2alpha+1}
};

std::string_view to_string(BoundSource s);

struct BoundValue {
    Rational value;
    BoundSource source;
};

/// (2n^3 - (3p^2 - 6p + 2)n + p^3 + 3p^2 - 10p) / 12; n >= 4, 1 <= p <= n - 2.
Rational pendant_bound(int n, int p);

/// (2a^3 + 6a^2 b + 3ab^2 + 6ab - 2a + 9b^2 - 12b) / 12; a >= 2, b >= 1.
Rational tab_bound(int a, int b);

/// (-t^3 + 3t^2 + (3n^2 - 12n + 10)t + 9n^2 - 12n) / 12; 2 <= t <= n - 1.
Rational tab_bound_eq(int n, int t);

/// (-8k^3 + 36k^2 + 2(3n^2 - 12n - 14)k + 3n^2 + 12n) / 12; 2 <= 2k - 2 <= n - 1.
Rational f2k2(int n, int k);

/// W of P_{2k} with a pendants on v_1, b on v_{2k} and the remaining
/// n - 2k - a - b on v_3. Requires a, b >= 1 and a + b <= n - 2k.
Rational w_doublebroom(int n, int k, int a, int b);

/// W of the three-legged tree of order 2k - 1 (legs of length 2k - 6, 2, 2)
/// with a pendants on the long leg's end and b, c on the short legs' ends.
/// Requires k >= 4, a, b, c >= 0 and a + b + c = n - 2k + 1.
Rational w_spider(int n, int k, int a, int b, int c);

/// Evaluates one of the average-distance bounds at parameter k (or alpha).
/// Only LeAdd, Diameter, LeFinal2, LeExtra, ThNew and Th1 are mu-bounds.
BoundValue bound_of(BoundSource source, int k);

/// (-8k^3 + 36k^2 - 2(9n + 14)k + 3n^2 + 12n) / (6n(n-1)); k >= 2, n >= 2k.
Rational dumbbell_gap(int n, int k);

/// (-4a^3 + 12a^2 - (9n - 1)a + 3n^2 - 3) / (3n(n-1)); a >= 1, n >= 2a.
Rational mu_gap_alpha(int n, int alpha);

/// The piecewise refined bound: alpha + 1 up to 6, then
/// alpha + 1/2 + 4(alpha - 1)/alpha^2.
inline Rational th1_bound(int alpha) { return bound_of(BoundSource::Th1, alpha).value; }

} // namespace spanmu::formulas
