#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cq {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in canonical form after every operation:
// den > 0, gcd(|num|, den) == 1, zero represented as 0/1.  Immutable value
// semantics; all operations are pure and safe to call concurrently.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    template <std::integral T>
    Rational(T n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    // Throws std::domain_error when den == 0.
    Rational(BigInt num, BigInt den);

    // Accepts "p" or "p/q" with an optional leading '-' on p and q > 0.
    // Decimal notation is rejected.  Throws std::invalid_argument.
    static Rational from_string(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    int sign() const noexcept { return num_.sign(); }

    double to_double() const;
    std::string to_string() const;  // "p" when den == 1, otherwise "p/q"

    Rational operator-() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

    friend bool operator==(const Rational& l, const Rational& r) noexcept {
        return l.num_ == r.num_ && l.den_ == r.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cq
