#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lindisc/errors.hpp"

namespace lindisc {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction in canonical form: denominator > 0, gcd(|num|, den) = 1.
// Canonicalization happens on construction, so equality is structural and
// values are safe to share across threads once built.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "p/q", an integer, or a finite decimal ("1.5" becomes 3/2).
    static Rational parse(std::string_view text);

    const BigInt &numerator() const { return num_; }
    const BigInt &denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational abs() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o); // throws DomainError on zero divisor

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    // "p/q" when q != 1, otherwise just "p".
    std::string to_string() const;

    // Lossy; for diagnostics only.
    double to_double() const;

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

  private:
    void canonicalize();

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational &r) { return r.abs(); }

} // namespace lindisc
