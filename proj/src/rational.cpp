#include "lindisc/rational.hpp"

#include <cctype>
#include <ostream>

namespace lindisc {

namespace {

BigInt parse_digits(std::string_view s, std::string_view whole) {
    if (s.empty()) {
        throw ParseError(0, "expected digits in rational '" + std::string(whole) + "'");
    }
    BigInt v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(0, "bad character '" + std::string(1, c) + "' in rational '" +
                                    std::string(whole) + "'");
        }
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DomainError("rational with zero denominator");
    }
    canonicalize();
}

void Rational::canonicalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    if (s.empty()) {
        throw ParseError(0, "empty rational");
    }
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) {
        throw ParseError(0, "sign without digits in rational '" + std::string(text) + "'");
    }

    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_digits(s.substr(0, slash), text);
        BigInt den = parse_digits(s.substr(slash + 1), text);
        if (den == 0) {
            throw ParseError(0, "zero denominator in rational '" + std::string(text) + "'");
        }
        out = Rational(std::move(num), std::move(den));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty()) {
            throw ParseError(0, "missing digits after '.' in rational '" + std::string(text) + "'");
        }
        BigInt num = whole.empty() ? BigInt(0) : parse_digits(whole, text);
        BigInt den = 1;
        for (char c : frac) {
            (void)c;
            den *= 10;
        }
        num *= den;
        num += parse_digits(frac, text);
        out = Rational(std::move(num), std::move(den));
    } else {
        out = Rational(parse_digits(s, text), BigInt(1));
    }
    return negative ? -out : out;
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_ < 0) {
        r.num_ = -r.num_;
    }
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational &Rational::operator+=(const Rational &o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    canonicalize();
    return *this;
}

Rational &Rational::operator-=(const Rational &o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
    }
    canonicalize();
    return *this;
}

Rational &Rational::operator*=(const Rational &o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.num_ == 0) {
        throw DomainError("division of rational by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    // Denominators are positive, so cross-multiplying preserves order.
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

} // namespace lindisc
