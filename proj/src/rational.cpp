#include "condinf/rational.hpp"

#include <stdexcept>

namespace condinf {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash != std::string_view::npos) {
            BigInt n = BigInt::from_string(s.substr(0, slash));
            BigInt d = BigInt::from_string(s.substr(slash + 1));
            if (d.is_zero()) return std::nullopt;
            return Rational(std::move(n), std::move(d));
        }
        auto dot = s.find('.');
        if (dot == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
        std::string digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        if (digits == "-" || digits == "+" || digits.empty()) return std::nullopt;
        BigInt n = BigInt::from_string(digits);
        BigInt d(1);
        for (std::size_t i = dot + 1; i < s.size(); ++i) d *= BigInt(10);
        return Rational(std::move(n), std::move(d));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    // gcd trick keeps intermediates small through long folds
    BigInt g = BigInt::gcd(a.den_, b.den_);
    if (g.is_one()) return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    BigInt ad = a.den_ / g, bd = b.den_ / g;
    return Rational(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    BigInt g1 = BigInt::gcd(a.num_, b.den_);
    BigInt g2 = BigInt::gcd(b.num_, a.den_);
    return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    int s = num_.sign(), t = other.num_.sign();
    if (s != t) return s <=> t;
    return (num_ * other.den_) <=> (other.num_ * den_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

BigInt Rational::floor() const {
    auto [quot, rem] = BigInt::divmod(num_, den_);
    if (num_.sign() < 0 && !rem.is_zero()) return quot - BigInt(1);
    return quot;
}

BigInt Rational::ceil() const {
    auto [quot, rem] = BigInt::divmod(num_, den_);
    if (num_.sign() > 0 && !rem.is_zero()) return quot + BigInt(1);
    return quot;
}

std::string Rational::str() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace condinf
