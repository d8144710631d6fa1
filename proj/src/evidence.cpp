#include "evident/evidence.hpp"

#include <algorithm>
#include <cmath>

#include "evident/error.hpp"

namespace evident {

namespace {

void require_frame(const Frame& frame, const Proposition& p) {
    if (p.frame_id() != frame.id()) throw Error(ErrorCode::FrameMismatch, "proposition belongs to another frame");
}

std::vector<Focal> to_focals(const Frame& frame, const std::map<std::uint64_t, double>& masses) {
    std::vector<Focal> focals;
    focals.reserve(masses.size());
    for (const auto& [bits, mass] : masses) focals.push_back({frame.from_bits(bits), mass});
    return focals;
}

}  // namespace

MassFunction MassFunction::make(const Frame& frame, const std::vector<std::pair<Proposition, double>>& entries) {
    std::map<std::uint64_t, double> masses;
    double total = 0.0;
    for (const auto& [p, value] : entries) {
        require_frame(frame, p);
        if (!(value >= 0.0)) throw Error(ErrorCode::NegativeMass, "mass must be non-negative");
        if (value == 0.0) continue;
        if (p.is_empty()) throw Error(ErrorCode::MassOnEmptySet, "the empty proposition cannot carry mass");
        masses[p.bits()] += value;
        total += value;
    }
    if (!(std::abs(total - 1.0) <= kNormalizationTolerance)) throw NotNormalizedError(total);
    return MassFunction(frame, to_focals(frame, masses));
}

MassFunction MassFunction::from_normalized(const Frame& frame, std::map<std::uint64_t, double> masses) {
    for (auto it = masses.begin(); it != masses.end();) {
        if (it->first == 0) throw Error(ErrorCode::MassOnEmptySet, "the empty proposition cannot carry mass");
        if (!(it->second >= 0.0)) throw Error(ErrorCode::NegativeMass, "mass must be non-negative");
        it = it->second == 0.0 ? masses.erase(it) : std::next(it);
    }
    return MassFunction(frame, to_focals(frame, masses));
}

double MassFunction::mass(const Proposition& p) const {
    require_frame(frame_, p);
    for (const auto& focal : focals_) {
        if (focal.proposition.bits() == p.bits()) return focal.mass;
    }
    return 0.0;
}

double MassFunction::total() const noexcept {
    double sum = 0.0;
    for (const auto& focal : focals_) sum += focal.mass;
    return sum;
}

MassFunction mass_new(const Frame& frame, const std::vector<std::pair<Proposition, double>>& entries) {
    return MassFunction::make(frame, entries);
}

MassFunction simple_support(const Frame& frame, const Proposition& focus, double degree) {
    require_frame(frame, focus);
    if (focus.is_empty()) throw Error(ErrorCode::EmptyFocus, "a simple support function needs a non-empty focus");
    if (!(degree >= 0.0 && degree <= 1.0)) throw Error(ErrorCode::DegreeOutOfRange, "degree must lie in [0, 1]");
    return MassFunction::make(frame, {{focus, degree}, {frame.full(), 1.0 - degree}});
}

MassFunction vacuous(const Frame& frame) { return MassFunction::make(frame, {{frame.full(), 1.0}}); }

MassFunction bayesian_from_probabilities(const Frame& frame, const std::map<std::string, double, std::less<>>& probs) {
    for (const auto& [name, value] : probs) {
        if (!frame.index_of(name)) throw Error(ErrorCode::UnknownAtom, "atom '" + name + "' is not in the frame");
    }
    std::vector<std::pair<Proposition, double>> entries;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        auto it = probs.find(frame.atom(i));
        if (it == probs.end()) throw Error(ErrorCode::MissingAtom, "no probability for atom '" + frame.atom(i) + "'");
        entries.emplace_back(frame.singleton(i), it->second);
    }
    return MassFunction::make(frame, entries);
}

bool is_bayesian(const MassFunction& m) noexcept {
    for (const auto& focal : m.focals()) {
        if (focal.proposition.cardinality() != 1) return false;
    }
    return true;
}

double belief(const MassFunction& m, const Proposition& a) {
    require_frame(m.frame(), a);
    double sum = 0.0;
    for (const auto& focal : m.focals()) {
        if ((focal.proposition.bits() & ~a.bits()) == 0) sum += focal.mass;
    }
    return sum;
}

double plausibility(const MassFunction& m, const Proposition& a) {
    require_frame(m.frame(), a);
    double sum = 0.0;
    for (const auto& focal : m.focals()) {
        if ((focal.proposition.bits() & a.bits()) != 0) sum += focal.mass;
    }
    return sum;
}

EvidentialInterval interval(const MassFunction& m, const Proposition& a) {
    // Masses may total 1 +/- 1e-9; clamp so the interval stays inside [0, 1].
    const double pl = std::min(plausibility(m, a), 1.0);
    const double bel = std::min(belief(m, a), pl);
    return {bel, pl};
}

}  // namespace evident
