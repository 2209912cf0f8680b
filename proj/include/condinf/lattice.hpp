#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "condinf/rational.hpp"

namespace condinf {

// A lattice instance provides, over its value type:
//   leq (partial order), join/meet, finite sup/inf, top/bottom, equal,
//   and a strictly increasing real score phi.
// sup([]) == bottom and inf([]) == top by the complete-lattice convention.
template <class L>
concept LatticeLike = requires(const L& lat, const typename L::Value& a,
                               const typename L::Value& b,
                               std::span<const typename L::Value> xs) {
    { lat.leq(a, b) } -> std::convertible_to<bool>;
    { lat.equal(a, b) } -> std::convertible_to<bool>;
    { lat.join(a, b) } -> std::convertible_to<typename L::Value>;
    { lat.meet(a, b) } -> std::convertible_to<typename L::Value>;
    { lat.sup(xs) } -> std::convertible_to<typename L::Value>;
    { lat.inf(xs) } -> std::convertible_to<typename L::Value>;
    { lat.top() } -> std::convertible_to<typename L::Value>;
    { lat.bottom() } -> std::convertible_to<typename L::Value>;
    { lat.phi(a) } -> std::convertible_to<double>;
};

/// Strict comparison: a < b iff a <= b and a != b.
template <LatticeLike L>
bool lt(const L& lat, const typename L::Value& a, const typename L::Value& b) {
    return lat.leq(a, b) && !lat.equal(a, b);
}

// ---------------------------------------------------------------------------
// Extended reals [-inf, inf]
// ---------------------------------------------------------------------------

struct ExtReal {
    enum class Tag { neg_inf, finite, pos_inf };
    Tag tag = Tag::finite;
    Rational value;  // meaningful only when finite

    static ExtReal ninf() { return {Tag::neg_inf, {}}; }
    static ExtReal pinf() { return {Tag::pos_inf, {}}; }
    static ExtReal of(Rational r) { return {Tag::finite, std::move(r)}; }
    static ExtReal of(std::int64_t v) { return of(Rational(v)); }

    bool is_finite() const { return tag == Tag::finite; }
    const Rational& finite_value() const {
        if (!is_finite()) throw std::domain_error("ExtReal: infinite value");
        return value;
    }

    bool operator==(const ExtReal& o) const {
        return tag == o.tag && (tag != Tag::finite || value == o.value);
    }
    std::string str() const {
        switch (tag) {
            case Tag::neg_inf: return "-inf";
            case Tag::pos_inf: return "inf";
            default: return value.str();
        }
    }
};

inline bool extreal_leq(const ExtReal& a, const ExtReal& b) {
    using Tag = ExtReal::Tag;
    if (a.tag == Tag::neg_inf || b.tag == Tag::pos_inf) return true;
    if (a.tag == Tag::pos_inf) return b.tag == Tag::pos_inf;
    if (b.tag == Tag::neg_inf) return a.tag == Tag::neg_inf;
    return a.value <= b.value;
}

/// The complete lattice of Example "extended reals": total order, join = max.
struct ExtendedRealLattice {
    using Value = ExtReal;

    bool leq(const Value& a, const Value& b) const { return extreal_leq(a, b); }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    Value join(const Value& a, const Value& b) const { return leq(a, b) ? b : a; }
    Value meet(const Value& a, const Value& b) const { return leq(a, b) ? a : b; }
    Value sup(std::span<const Value> xs) const {
        Value acc = bottom();
        for (const auto& x : xs) acc = join(acc, x);
        return acc;
    }
    Value inf(std::span<const Value> xs) const {
        Value acc = top();
        for (const auto& x : xs) acc = meet(acc, x);
        return acc;
    }
    Value top() const { return ExtReal::pinf(); }
    Value bottom() const { return ExtReal::ninf(); }

    // (2/pi) arctan on finite values, +-2 at the endpoints, as in the
    // Dedekind extension construction.
    double phi(const Value& a) const {
        switch (a.tag) {
            case ExtReal::Tag::neg_inf: return -2.0;
            case ExtReal::Tag::pos_inf: return 2.0;
            default: return (2.0 / std::numbers::pi) * std::atan(a.value.to_double());
        }
    }
};

// ---------------------------------------------------------------------------
// Weighted power set of a finite ground set (countable X truncated)
// ---------------------------------------------------------------------------

struct SetValue {
    std::uint64_t bits = 0;
    bool operator==(const SetValue&) const = default;
};

/// Subsets of a finite ground set ordered by inclusion, with
/// phi(A) = sum of strictly positive weights over A (weights sum to one).
class PowerSetLattice {
public:
    using Value = SetValue;

    PowerSetLattice(std::vector<std::string> ground, std::vector<Rational> weights);

    /// Default instance: weights proportional to 2^-k, normalized to sum 1.
    static PowerSetLattice dyadic(std::vector<std::string> ground);

    bool leq(const Value& a, const Value& b) const {
        check(a);
        check(b);
        return (a.bits & ~b.bits) == 0;
    }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    Value join(const Value& a, const Value& b) const {
        check(a);
        check(b);
        return {a.bits | b.bits};
    }
    Value meet(const Value& a, const Value& b) const {
        check(a);
        check(b);
        return {a.bits & b.bits};
    }
    Value sup(std::span<const Value> xs) const {
        Value acc = bottom();
        for (const auto& x : xs) acc = join(acc, x);
        return acc;
    }
    Value inf(std::span<const Value> xs) const {
        Value acc = top();
        for (const auto& x : xs) acc = meet(acc, x);
        return acc;
    }
    Value top() const { return {full_}; }
    Value bottom() const { return {0}; }

    Rational phi_exact(const Value& a) const;
    double phi(const Value& a) const { return phi_exact(a).to_double(); }

    std::size_t size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<Rational>& weights() const { return weights_; }

    Value from_names(std::span<const std::string> names) const;
    Value from_indices(std::span<const int> indices) const;
    std::vector<std::string> names_of(const Value& a) const;

private:
    std::vector<std::string> ground_;
    std::vector<Rational> weights_;
    std::uint64_t full_ = 0;

    void check(const Value& a) const {
        if ((a.bits & ~full_) != 0)
            throw std::invalid_argument("PowerSetLattice: value from a different ground set");
    }
};

// ---------------------------------------------------------------------------
// Order-theoretic indicator
// ---------------------------------------------------------------------------

/// chi_A as a random lattice element: bottom on the event, top off it.
template <LatticeLike L>
std::vector<typename L::Value> order_indicator(const L& lat, int outcomes,
                                               std::span<const int> event) {
    std::vector<typename L::Value> out(static_cast<std::size_t>(outcomes), lat.top());
    for (int w : event) out.at(static_cast<std::size_t>(w)) = lat.bottom();
    return out;
}

// ---------------------------------------------------------------------------
// Dedekind completion
// ---------------------------------------------------------------------------

// A Dedekind-complete base provides sup/inf only for families it can bound:
// sup_bounded/inf_bounded return nullopt when no supremum/infimum exists in
// the base. phi0 is the base's strictly increasing score.
template <class B>
concept DedekindBase = requires(const B& base, const typename B::Value& a,
                                const typename B::Value& b,
                                std::span<const typename B::Value> xs) {
    { base.leq(a, b) } -> std::convertible_to<bool>;
    { base.equal(a, b) } -> std::convertible_to<bool>;
    { base.sup_bounded(xs) } -> std::convertible_to<std::optional<typename B::Value>>;
    { base.inf_bounded(xs) } -> std::convertible_to<std::optional<typename B::Value>>;
    { base.phi0(a) } -> std::convertible_to<double>;
};

/// Completion of a Dedekind-complete lattice: adjoins synthetic endpoints and
/// rescales the base score through (2/pi) arctan so that phi(-inf) = -2 and
/// phi(+inf) = +2 stay strictly outside the base range.
template <DedekindBase B>
class DedekindExtension {
public:
    struct Value {
        int tag = 0;  // -1 bottom, 0 base, +1 top
        typename B::Value base{};
    };

    explicit DedekindExtension(B base) : base_(std::move(base)) {}

    static Value neg_inf() { return {-1, {}}; }
    static Value pos_inf() { return {+1, {}}; }
    static Value of(typename B::Value v) { return {0, std::move(v)}; }

    bool leq(const Value& a, const Value& b) const {
        if (a.tag < b.tag) return true;
        if (a.tag > b.tag) return false;
        if (a.tag != 0) return true;
        return base_.leq(a.base, b.base);
    }
    bool equal(const Value& a, const Value& b) const {
        if (a.tag != b.tag) return false;
        return a.tag != 0 || base_.equal(a.base, b.base);
    }
    Value join(const Value& a, const Value& b) const {
        const Value items[2] = {a, b};
        return sup(items);
    }
    Value meet(const Value& a, const Value& b) const {
        const Value items[2] = {a, b};
        return inf(items);
    }
    Value sup(std::span<const Value> xs) const {
        std::vector<typename B::Value> base_vals;
        for (const auto& x : xs) {
            if (x.tag > 0) return pos_inf();
            if (x.tag == 0) base_vals.push_back(x.base);
        }
        if (base_vals.empty()) return neg_inf();
        auto s = base_.sup_bounded(base_vals);
        return s ? of(*s) : pos_inf();  // unbounded above in the base
    }
    Value inf(std::span<const Value> xs) const {
        std::vector<typename B::Value> base_vals;
        for (const auto& x : xs) {
            if (x.tag < 0) return neg_inf();
            if (x.tag == 0) base_vals.push_back(x.base);
        }
        if (base_vals.empty()) return pos_inf();
        auto s = base_.inf_bounded(base_vals);
        return s ? of(*s) : neg_inf();
    }
    Value top() const { return pos_inf(); }
    Value bottom() const { return neg_inf(); }

    double phi(const Value& a) const {
        if (a.tag < 0) return -2.0;
        if (a.tag > 0) return 2.0;
        return (2.0 / std::numbers::pi) * std::atan(base_.phi0(a.base));
    }

    const B& base() const { return base_; }

private:
    B base_;
};

/// Plain rationals as a Dedekind-complete (totally ordered) base lattice.
struct RationalBaseLattice {
    using Value = Rational;
    bool leq(const Value& a, const Value& b) const { return a <= b; }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    std::optional<Value> sup_bounded(std::span<const Value> xs) const {
        if (xs.empty()) return std::nullopt;
        Value m = xs[0];
        for (const auto& x : xs.subspan(1)) m = max(m, x);
        return m;
    }
    std::optional<Value> inf_bounded(std::span<const Value> xs) const {
        if (xs.empty()) return std::nullopt;
        Value m = xs[0];
        for (const auto& x : xs.subspan(1)) m = min(m, x);
        return m;
    }
    double phi0(const Value& a) const { return a.to_double(); }
};

}  // namespace condinf
