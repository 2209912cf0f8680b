#include "condinf/lattice.hpp"

#include <algorithm>

namespace condinf {

PowerSetLattice::PowerSetLattice(std::vector<std::string> ground, std::vector<Rational> weights)
    : ground_(std::move(ground)), weights_(std::move(weights)) {
    if (ground_.empty() || ground_.size() > 64)
        throw std::invalid_argument("PowerSetLattice: ground set must have 1..64 sites");
    if (weights_.size() != ground_.size())
        throw std::invalid_argument("PowerSetLattice: one weight per ground site required");
    Rational total(0);
    for (const auto& w : weights_) {
        if (w.sign() <= 0)
            throw std::invalid_argument("PowerSetLattice: weights must be strictly positive");
        total += w;
    }
    if (total != Rational(1))
        throw std::invalid_argument("PowerSetLattice: weights must sum to one, got " +
                                    total.str());
    full_ = ground_.size() == 64 ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << ground_.size()) - 1);
}

PowerSetLattice PowerSetLattice::dyadic(std::vector<std::string> ground) {
    const std::size_t n = ground.size();
    if (n == 0 || n > 62)
        throw std::invalid_argument("PowerSetLattice::dyadic: ground size must be 1..62");
    // w_k = 2^-(k+1) / (1 - 2^-n), so the weights stay dyadic-proportional.
    std::vector<Rational> weights;
    weights.reserve(n);
    BigInt denom = BigInt(1).shifted_left(static_cast<unsigned>(n)) - BigInt(1);
    for (std::size_t k = 0; k < n; ++k) {
        BigInt num = BigInt(1).shifted_left(static_cast<unsigned>(n - 1 - k));
        weights.emplace_back(num, denom);
    }
    return PowerSetLattice(std::move(ground), std::move(weights));
}

Rational PowerSetLattice::phi_exact(const Value& a) const {
    check(a);
    Rational total(0);
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (a.bits & (std::uint64_t{1} << i)) total += weights_[i];
    }
    return total;
}

PowerSetLattice::Value PowerSetLattice::from_names(std::span<const std::string> names) const {
    Value v;
    for (const auto& name : names) {
        auto it = std::find(ground_.begin(), ground_.end(), name);
        if (it == ground_.end())
            throw std::invalid_argument("PowerSetLattice: unknown site \"" + name + "\"");
        v.bits |= std::uint64_t{1} << (it - ground_.begin());
    }
    return v;
}

PowerSetLattice::Value PowerSetLattice::from_indices(std::span<const int> indices) const {
    Value v;
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= ground_.size())
            throw std::invalid_argument("PowerSetLattice: site index out of range");
        v.bits |= std::uint64_t{1} << i;
    }
    return v;
}

std::vector<std::string> PowerSetLattice::names_of(const Value& a) const {
    check(a);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (a.bits & (std::uint64_t{1} << i)) out.push_back(ground_[i]);
    }
    return out;
}

}  // namespace condinf
