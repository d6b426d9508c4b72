#include "spanmu/rational.hpp"

#include <cmath>
#include <ostream>
#include <utility>

#include "spanmu/error.hpp"

namespace spanmu {

namespace {

BigInt pow10(long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(std::int64_t value) : q_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)))
{
}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const BigInt& value) : q_(value) {}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(n, d);
}

std::string Rational::str() const { return num_str() + "/" + den_str(); }

std::string Rational::to_decimal(int digits) const
{
    if (digits < 1) {
        throw InvalidArgument("to_decimal needs at least one digit");
    }
    if (sign() == 0) {
        return "0";
    }
    mpq_class a = abs(q_);
    // Locate e with 10^e <= a < 10^(e+1), starting from a floating estimate.
    long e = static_cast<long>(std::floor(std::log10(a.get_d())));
    auto scaled_at = [&](long exp) {
        mpq_class s = a;
        if (exp >= 0) {
            s /= mpq_class(pow10(exp));
        } else {
            s *= mpq_class(pow10(-exp));
        }
        return s;
    };
    while (scaled_at(e) >= 10) {
        ++e;
    }
    while (scaled_at(e) < 1) {
        --e;
    }

    long shift = digits - 1 - e;
    mpq_class s = a;
    if (shift >= 0) {
        s *= mpq_class(pow10(shift));
    } else {
        s /= mpq_class(pow10(-shift));
    }
    BigInt floor_part;
    mpz_fdiv_q(floor_part.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    mpq_class frac = s - mpq_class(floor_part);
    int c = cmp(frac, mpq_class(1, 2));
    if (c > 0 || (c == 0 && mpz_odd_p(floor_part.get_mpz_t()))) {
        floor_part += 1;
    }
    if (floor_part == pow10(digits)) {
        floor_part /= 10;
        ++e;
    }

    std::string mant = floor_part.get_str();
    std::string out = sign() < 0 ? "-" : "";
    if (e >= digits - 1) {
        out += mant;
        out.append(static_cast<std::size_t>(e - (digits - 1)), '0');
    } else if (e >= 0) {
        out += mant.substr(0, static_cast<std::size_t>(e + 1));
        out += '.';
        out += mant.substr(static_cast<std::size_t>(e + 1));
    } else {
        out += "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        out += mant;
    }
    return out;
}

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.sign() == 0) {
        throw InvalidArgument("division by zero rational");
    }
    q_ /= o.q_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace spanmu
