#include "condinf/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace condinf {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json item{{"name", c.name}, {"verdict", c.pass ? "pass" : "fail"}};
        if (!c.witness.empty()) item["witness"] = c.witness;
        if (c.ms > 0.0) item["ms"] = c.ms;
        arr.push_back(std::move(item));
    }
    return arr;
}

void FiniteFilteredSpace::finalize() {
    const int m = outcomes();
    if (m == 0) throw std::invalid_argument("space: at least one outcome required");
    if (partitions.empty()) throw std::invalid_argument("space: at least partition(0) required");
    if (!labels.empty() && static_cast<int>(labels.size()) != m)
        throw std::invalid_argument("space: label count mismatch");
    atom_of_outcome_.assign(partitions.size(), std::vector<int>(m, -1));
    for (std::size_t t = 0; t < partitions.size(); ++t) {
        for (std::size_t a = 0; a < partitions[t].size(); ++a) {
            for (int w : partitions[t][a]) {
                if (w < 0 || w >= m)
                    throw std::invalid_argument("space: outcome index out of range");
                if (atom_of_outcome_[t][w] != -1)
                    throw std::invalid_argument("space: outcome appears in two atoms at t=" +
                                                std::to_string(t));
                atom_of_outcome_[t][w] = static_cast<int>(a);
            }
        }
        for (int w = 0; w < m; ++w) {
            if (atom_of_outcome_[t][w] == -1)
                throw std::invalid_argument("space: outcome missing from partition at t=" +
                                            std::to_string(t));
        }
    }
}

Rational FiniteFilteredSpace::atom_prob(int t, int atom) const {
    Rational total(0);
    for (int w : partitions[t][atom]) total += probs[w];
    return total;
}

VerificationReport validate_space(const FiniteFilteredSpace& space) {
    VerificationReport report;

    bool positive = true;
    nlohmann::json pos_witness = nlohmann::json::object();
    Rational total(0);
    for (int w = 0; w < space.outcomes(); ++w) {
        if (space.probs[w].sign() <= 0) {
            positive = false;
            pos_witness = {{"outcome", w}, {"prob", space.probs[w].str()}};
        }
        total += space.probs[w];
    }
    report.add("space.positive_probs", positive, pos_witness);
    report.add("space.probs_sum_to_one", total == Rational(1),
               total == Rational(1) ? nlohmann::json::object()
                                    : nlohmann::json{{"sum", total.str()}});

    // partition(t+1) refines partition(t): every later atom sits inside one
    // earlier atom.
    bool refines = true;
    nlohmann::json ref_witness = nlohmann::json::object();
    for (int t = 0; t + 1 <= space.horizon() && refines; ++t) {
        for (std::size_t a = 0; a < space.partitions[t + 1].size(); ++a) {
            const auto& atom = space.partitions[t + 1][a];
            int parent = space.atom_index(t, atom[0]);
            for (int w : atom) {
                if (space.atom_index(t, w) != parent) {
                    refines = false;
                    ref_witness = {{"t", t + 1}, {"atom", a}, {"outcome", w}};
                    break;
                }
            }
            if (!refines) break;
        }
    }
    report.add("space.refining", refines, ref_witness);
    return report;
}

VerificationReport validate_stopping_time(const FiniteFilteredSpace& space,
                                          const StoppingTime& st) {
    VerificationReport report;
    bool shape = static_cast<int>(st.tau.size()) == space.outcomes();
    report.add("stopping_time.shape", shape);
    if (!shape) return report;

    bool in_range = true;
    for (int v : st.tau) {
        if (v != StoppingTime::never && (v < 0 || v > space.horizon())) in_range = false;
    }
    report.add("stopping_time.range", in_range);
    if (!in_range) return report;

    // {tau = t} must be a union of time-t atoms; {tau = never} a union of
    // time-T atoms.
    bool measurable = true;
    nlohmann::json witness = nlohmann::json::object();
    for (int w = 0; w < space.outcomes() && measurable; ++w) {
        const int level = st.tau[w] == StoppingTime::never ? space.horizon() : st.tau[w];
        for (int w2 : space.atom_of(level, w)) {
            if (st.tau[w2] != st.tau[w]) {
                measurable = false;
                witness = {{"t", st.tau[w] == StoppingTime::never ? -1 : st.tau[w]},
                           {"outcome", w},
                           {"conflicting_outcome", w2}};
                break;
            }
        }
    }
    report.add("stopping_time.measurable", measurable, witness);
    return report;
}

Atoms f_tau_atoms(const FiniteFilteredSpace& space, const StoppingTime& st) {
    Atoms atoms;
    std::vector<bool> seen(space.outcomes(), false);
    for (int w = 0; w < space.outcomes(); ++w) {
        if (seen[w]) continue;
        const int level = st.tau[w] == StoppingTime::never ? space.horizon() : st.tau[w];
        auto atom = space.atom_of(level, w);
        atoms.emplace_back(atom.begin(), atom.end());
        for (int w2 : atom) seen[w2] = true;
    }
    return atoms;
}

RandomElement<Rational> cond_expectation(const RandomElement<Rational>& x, const Atoms& atoms,
                                         const std::vector<Rational>& probs) {
    RandomElement<Rational> out(x.size());
    for (const auto& atom : atoms) {
        Rational mass(0), weighted(0);
        for (int w : atom) {
            mass += probs.at(w);
            weighted += probs.at(w) * x.at(w);
        }
        Rational mean = weighted / mass;
        for (int w : atom) out[w] = mean;
    }
    return out;
}

}  // namespace condinf
