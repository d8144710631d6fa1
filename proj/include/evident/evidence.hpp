#pragma once
// Mass distributions and the evidential interval [belief, plausibility].

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "evident/frame.hpp"

namespace evident {

inline constexpr double kNormalizationTolerance = 1e-9;

struct Focal {
    Proposition proposition;
    double mass;
};

// Lower bound is the support the evidence gives a proposition, upper bound the
// degree to which the evidence fails to refute it.
struct EvidentialInterval {
    double support = 0.0;
    double plausibility = 1.0;

    double ignorance() const noexcept { return plausibility - support; }
    bool valid() const noexcept {
        return 0.0 <= support && support <= plausibility && plausibility <= 1.0;
    }
};

class MassFunction {
public:
    // Drops zero entries and sums duplicates. Throws MassOnEmptySet,
    // NegativeMass, NotNormalized (total off by more than 1e-9) or FrameMismatch.
    static MassFunction make(const Frame& frame, const std::vector<std::pair<Proposition, double>>& entries);

    // Wraps masses produced by a normalizing computation; only checks frame
    // membership and positivity.
    static MassFunction from_normalized(const Frame& frame, std::map<std::uint64_t, double> masses);

    const Frame& frame() const noexcept { return frame_; }
    // Focal elements ordered by bitmask.
    const std::vector<Focal>& focals() const noexcept { return focals_; }
    // Mass on exactly p (0 when p is not focal).
    double mass(const Proposition& p) const;
    double total() const noexcept;

private:
    MassFunction(Frame frame, std::vector<Focal> focals) : frame_(std::move(frame)), focals_(std::move(focals)) {}

    Frame frame_;
    std::vector<Focal> focals_;
};

MassFunction mass_new(const Frame& frame, const std::vector<std::pair<Proposition, double>>& entries);

// {focus: degree, frame: 1 - degree}. Throws EmptyFocus or DegreeOutOfRange.
MassFunction simple_support(const Frame& frame, const Proposition& focus, double degree);

MassFunction vacuous(const Frame& frame);

// Singleton masses from a probability per atom. Throws MissingAtom,
// NegativeMass, NotNormalized or UnknownAtom.
MassFunction bayesian_from_probabilities(const Frame& frame, const std::map<std::string, double, std::less<>>& probs);

bool is_bayesian(const MassFunction& m) noexcept;

double belief(const MassFunction& m, const Proposition& a);
double plausibility(const MassFunction& m, const Proposition& a);
EvidentialInterval interval(const MassFunction& m, const Proposition& a);

}  // namespace evident
