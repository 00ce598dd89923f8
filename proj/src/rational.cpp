#include "cq/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cq {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational: '" + std::string(text) +
                                    "' (expected \"p\" or \"p/q\" in integers)");
    };

    std::size_t pos = 0;
    const auto read_integer = [&](bool allow_sign) -> std::string {
        std::string out;
        if (pos < text.size() && allow_sign && (text[pos] == '-' || text[pos] == '+')) {
            if (text[pos] == '-') out.push_back('-');
            ++pos;
        }
        const std::size_t digits_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos]);
            ++pos;
        }
        if (pos == digits_start) fail();
        return out;
    };

    if (text.empty()) fail();
    const std::string num_digits = read_integer(true);
    std::string den_digits = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        den_digits = read_integer(false);
    }
    if (pos != text.size()) fail();

    BigInt den{den_digits};
    if (den.is_zero()) fail();
    return Rational(BigInt{num_digits}, std::move(den));
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::to_string() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    // Denominators are positive, so a/b <=> c/d reduces to a*d <=> c*b.
    const BigInt lhs = l.num_ * r.den_;
    const BigInt rhs = r.num_ * l.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (rhs < lhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace cq
