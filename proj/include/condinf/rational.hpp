#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "condinf/bigint.hpp"

namespace condinf {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);
    Rational(BigInt num, BigInt den);

    /// Accepts "p/q", integers, and plain decimals ("-0.25").
    static std::optional<Rational> parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    std::strong_ordering operator<=>(const Rational& other) const;
    bool operator==(const Rational& other) const = default;

    Rational abs() const;
    BigInt floor() const;
    BigInt ceil() const;

    double to_double() const { return num_.to_double() / den_.to_double(); }
    /// "p/q" for non-integers, plain "p" otherwise.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace condinf
