#pragma once

#include <cstdint>
#include <compare>
#include <utility>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace condinf {

/// Arbitrary-precision signed integer.
///
/// Magnitude is stored as little-endian 32-bit limbs with no trailing zero
/// limbs; zero has an empty limb vector and sign 0. Division truncates toward
/// zero, matching built-in integer semantics.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    int sign() const { return sign_; }

    BigInt abs() const;
    BigInt operator-() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    /// Quotient and remainder, truncated toward zero; the remainder keeps
    /// the dividend's sign (or is zero).
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b);

    BigInt shifted_left(unsigned bits) const;
    BigInt shifted_right(unsigned bits) const;

    std::strong_ordering operator<=>(const BigInt& other) const;
    bool operator==(const BigInt& other) const = default;

    /// Number of significant bits of the magnitude (0 for zero).
    unsigned bit_length() const;

    bool fits_int64() const;
    std::int64_t to_int64() const;  // requires fits_int64()
    double to_double() const;
    std::string to_string() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
    static std::vector<std::uint32_t> add_mag(std::span<const std::uint32_t> a,
                                              std::span<const std::uint32_t> b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(std::span<const std::uint32_t> a,
                                              std::span<const std::uint32_t> b);
    static std::vector<std::uint32_t> mul_mag(std::span<const std::uint32_t> a,
                                              std::span<const std::uint32_t> b);
    static void divmod_mag(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace condinf
