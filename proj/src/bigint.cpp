#include "condinf/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace condinf {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<u32> mag_from_u64(u64 v) {
    std::vector<u32> m;
    while (v != 0) {
        m.push_back(static_cast<u32>(v & 0xffffffffu));
        v >>= 32;
    }
    return m;
}

u64 mag_to_u64(std::span<const u32> m) {
    u64 v = 0;
    for (std::size_t i = m.size(); i-- > 0;) v = (v << 32) | m[i];
    return v;
}

}  // namespace

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    u64 mag = v < 0 ? (~static_cast<u64>(v) + 1) : static_cast<u64>(v);
    mag_ = mag_from_u64(mag);
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    int sign = 1;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : 1;
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in \"" + std::string(s) + "\"");
        out = out * BigInt(10) + BigInt(s[i] - '0');
    }
    if (sign < 0) out = -out;
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

int BigInt::cmp_mag(std::span<const u32> a, std::span<const u32> b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<u32> BigInt::add_mag(std::span<const u32> a, std::span<const u32> b) {
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<u32> out(a.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 s = carry + a[i] + (i < b.size() ? b[i] : 0);
        out[i] = static_cast<u32>(s);
        carry = s >> 32;
    }
    out[a.size()] = static_cast<u32>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<u32> BigInt::sub_mag(std::span<const u32> a, std::span<const u32> b) {
    std::vector<u32> out(a.begin(), a.end());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<u32>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<u32> BigInt::mul_mag(std::span<const u32> a, std::span<const u32> b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() <= 2 && b.size() <= 2) {
        u128 p = static_cast<u128>(mag_to_u64(a)) * mag_to_u64(b);
        std::vector<u32> out;
        while (p != 0) {
            out.push_back(static_cast<u32>(p & 0xffffffffu));
            p >>= 32;
        }
        return out;
    }
    std::vector<u32> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u64 cur = static_cast<u64>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<u32>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            u64 cur = out[k] + carry;
            out[k] = static_cast<u32>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D (TAOCP 4.3.1) on 32-bit limbs.
void BigInt::divmod_mag(std::span<const u32> a, std::span<const u32> b, std::vector<u32>& q,
                        std::vector<u32>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        r.assign(a.begin(), a.end());
        return;
    }
    if (b.size() == 1) {
        u64 d = b[0];
        q.assign(a.size(), 0);
        u64 rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            u64 cur = (rem << 32) | a[i];
            q[i] = static_cast<u32>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem != 0) r = mag_from_u64(rem);
        return;
    }
    if (a.size() <= 4 && b.size() <= 4) {
        u128 av = (static_cast<u128>(mag_to_u64(a.subspan(std::min<std::size_t>(2, a.size()))))
                   << 64) |
                  mag_to_u64(a.subspan(0, std::min<std::size_t>(2, a.size())));
        u128 bv = (static_cast<u128>(mag_to_u64(b.subspan(std::min<std::size_t>(2, b.size()))))
                   << 64) |
                  mag_to_u64(b.subspan(0, std::min<std::size_t>(2, b.size())));
        u128 qv = av / bv, rv = av % bv;
        while (qv != 0) {
            q.push_back(static_cast<u32>(qv & 0xffffffffu));
            qv >>= 32;
        }
        while (rv != 0) {
            r.push_back(static_cast<u32>(rv & 0xffffffffu));
            rv >>= 32;
        }
        return;
    }

    const int shift = std::countl_zero(b.back());
    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;

    // Normalized copies: v = b << shift, u = a << shift (u gets an extra limb).
    std::vector<u32> v(n), u(a.size() + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        u64 hi = b[i];
        u64 lo = i > 0 ? b[i - 1] : 0;
        v[i] = shift == 0 ? b[i] : static_cast<u32>((hi << shift) | (lo >> (32 - shift)));
    }
    for (std::size_t i = a.size() + 1; i-- > 0;) {
        u64 hi = i < a.size() ? a[i] : 0;
        u64 lo = i > 0 ? a[i - 1] : 0;
        u[i] = shift == 0 ? static_cast<u32>(hi)
                          : static_cast<u32>(((hi << shift) | (lo >> (32 - shift))) & 0xffffffffu);
    }

    q.assign(m + 1, 0);
    const u64 vtop = v[n - 1];
    const u64 vnext = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        u64 num = (static_cast<u64>(u[j + n]) << 32) | u[j + n - 1];
        u64 qhat = num / vtop;
        u64 rhat = num % vtop;
        while (qhat > 0xffffffffu ||
               qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat > 0xffffffffu) break;
        }
        // u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        u64 carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u64 p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t d = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            if (d < 0) {
                d += (std::int64_t{1} << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<u32>(d);
        }
        std::int64_t d = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) -
                         borrow;
        if (d < 0) {
            // qhat was one too large: add v back once.
            d += (std::int64_t{1} << 32);
            --qhat;
            u64 c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u64 s = static_cast<u64>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<u32>(s);
                c2 = s >> 32;
            }
            d += static_cast<std::int64_t>(c2);
        }
        u[j + n] = static_cast<u32>(d);
        q[j] = static_cast<u32>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(u.begin(), u.begin() + n);
    if (shift != 0) {
        for (std::size_t i = 0; i < n; ++i) {
            u64 hi = i + 1 < n ? r[i + 1] : 0;
            r[i] = static_cast<u32>(((hi << 32 | r[i]) >> shift) & 0xffffffffu);
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.sign_ = a.sign_;
            out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            out.sign_ = b.sign_;
            out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt out;
    out.sign_ = a.sign_ * b.sign_;
    out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return out;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    std::pair<BigInt, BigInt> res;
    if (a.sign_ == 0) return res;
    std::vector<u32> q, r;
    divmod_mag(a.mag_, b.mag_, q, r);
    if (!q.empty()) {
        res.first.sign_ = a.sign_ * b.sign_;
        res.first.mag_ = std::move(q);
    }
    if (!r.empty()) {
        res.second.sign_ = a.sign_;
        res.second.mag_ = std::move(r);
    }
    return res;
}

BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).first; }
BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).second; }

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BigInt BigInt::shifted_left(unsigned bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    BigInt out;
    out.sign_ = sign_;
    unsigned limbs = bits / 32, rem = bits % 32;
    out.mag_.assign(mag_.size() + limbs + 1, 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        u64 v = static_cast<u64>(mag_[i]) << rem;
        out.mag_[i + limbs] |= static_cast<u32>(v);
        out.mag_[i + limbs + 1] |= static_cast<u32>(v >> 32);
    }
    out.trim();
    return out;
}

BigInt BigInt::shifted_right(unsigned bits) const {
    if (sign_ == 0) return *this;
    unsigned limbs = bits / 32, rem = bits % 32;
    if (limbs >= mag_.size()) return BigInt();
    BigInt out;
    out.sign_ = sign_;
    out.mag_.assign(mag_.size() - limbs, 0);
    for (std::size_t i = 0; i < out.mag_.size(); ++i) {
        u64 hi = (i + limbs + 1 < mag_.size()) ? mag_[i + limbs + 1] : 0;
        u64 v = ((hi << 32) | mag_[i + limbs]) >> rem;
        out.mag_[i] = static_cast<u32>(v);
    }
    out.trim();
    return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
    if (sign_ != other.sign_) return sign_ <=> other.sign_;
    int c = cmp_mag(mag_, other.mag_) * (sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

unsigned BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    return static_cast<unsigned>(32 * (mag_.size() - 1) + (32 - std::countl_zero(mag_.back())));
}

bool BigInt::fits_int64() const {
    unsigned bl = bit_length();
    if (bl < 64) return true;
    // -2^63 exactly
    return bl == 64 && sign_ < 0 && mag_[0] == 0 && mag_[1] == 0x80000000u;
}

std::int64_t BigInt::to_int64() const {
    u64 v = mag_to_u64(mag_);
    return sign_ < 0 ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
}

double BigInt::to_double() const {
    if (sign_ == 0) return 0.0;
    unsigned bl = bit_length();
    double d;
    if (bl <= 64) {
        d = static_cast<double>(mag_to_u64(mag_));
    } else {
        BigInt top = shifted_right(bl - 64);
        d = std::ldexp(static_cast<double>(mag_to_u64(top.mag_)), static_cast<int>(bl - 64));
    }
    return sign_ < 0 ? -d : d;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<u32> cur = mag_;
    while (!cur.empty()) {
        // divide by 10^9 to peel 9 decimal digits at a time
        u64 rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            u64 v = (rem << 32) | cur[i];
            cur[i] = static_cast<u32>(v / 1000000000u);
            rem = v % 1000000000u;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace condinf
