#pragma once
// Committed belief per hypothesis and the decide-or-conflict rule.

#include <optional>
#include <string>
#include <vector>

#include "evident/combination.hpp"

namespace evident {

inline constexpr double kDefaultConflictThreshold = 0.95;
inline constexpr double kTieTolerance = 1e-12;

struct SupportTriple {
    double pro = 0.0;          // Bel(A)
    double con = 0.0;          // Bel(not A)
    double uncommitted = 1.0;  // Pl(A) - Bel(A)
};

// Throws FrameMismatch, or TrivialProposition when a is empty or the whole frame.
SupportTriple support_pro_con(const MassFunction& m, const Proposition& a);

enum class DecisionStatus : std::uint8_t { Decided, Leaning, Conflicted };
enum class ConflictReason : std::uint8_t { None, Tie, HighConflict };

struct RankedAtom {
    std::string atom;
    EvidentialInterval interval;
};

struct Decision {
    DecisionStatus status = DecisionStatus::Conflicted;
    ConflictReason reason = ConflictReason::Tie;
    std::optional<std::string> hypothesis;  // set for Decided and Leaning
    // Every atom once, by support descending; equal supports keep frame order.
    std::vector<RankedAtom> ranking;
    double cumulative_conflict = 0.0;
};

// "decided", "leaning", "conflicted:tie", "conflicted:high_conflict".
std::string status_label(const Decision& d);

// Conflicted(high_conflict) when the report's conflict reaches the threshold;
// otherwise the best singleton belief wins. A tie is Conflicted(tie); a
// winner whose belief beats every other atom's plausibility is Decided, and
// any other winner is Leaning. Throws InvalidThreshold unless 0 < t <= 1.
Decision decide(const CombinationReport& report, double conflict_threshold = kDefaultConflictThreshold);

}  // namespace evident
