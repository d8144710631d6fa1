#include "evident/decision.hpp"

#include <algorithm>

#include "evident/error.hpp"

namespace evident {

SupportTriple support_pro_con(const MassFunction& m, const Proposition& a) {
    if (a.frame_id() != m.frame().id()) throw Error(ErrorCode::FrameMismatch, "proposition belongs to another frame");
    if (a.is_empty() || a.is_full()) {
        throw Error(ErrorCode::TrivialProposition, "pro/con support needs a proposition strictly between empty and frame");
    }
    const auto iv = interval(m, a);
    const double con = belief(m, complement(a));
    return {iv.support, con, std::max(0.0, iv.plausibility - iv.support)};
}

std::string status_label(const Decision& d) {
    switch (d.status) {
        case DecisionStatus::Decided: return "decided";
        case DecisionStatus::Leaning: return "leaning";
        case DecisionStatus::Conflicted:
            return d.reason == ConflictReason::HighConflict ? "conflicted:high_conflict" : "conflicted:tie";
    }
    return "conflicted:tie";
}

Decision decide(const CombinationReport& report, double conflict_threshold) {
    if (!(conflict_threshold > 0.0 && conflict_threshold <= 1.0)) {
        throw Error(ErrorCode::InvalidThreshold, "conflict threshold must lie in (0, 1]");
    }
    const auto& m = report.result;
    const auto& frame = m.frame();

    Decision out;
    out.cumulative_conflict = report.conflict;
    std::vector<EvidentialInterval> intervals;
    intervals.reserve(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        intervals.push_back(interval(m, frame.singleton(i)));
        out.ranking.push_back({frame.atom(i), intervals.back()});
    }
    std::stable_sort(out.ranking.begin(), out.ranking.end(), [](const RankedAtom& a, const RankedAtom& b) {
        return a.interval.support > b.interval.support;
    });

    if (report.conflict >= conflict_threshold) {
        out.status = DecisionStatus::Conflicted;
        out.reason = ConflictReason::HighConflict;
        return out;
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].support > intervals[best].support) best = i;
    }
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i != best && intervals[best].support - intervals[i].support <= kTieTolerance) {
            out.status = DecisionStatus::Conflicted;
            out.reason = ConflictReason::Tie;
            return out;
        }
    }

    bool dominant = true;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i != best && !(intervals[best].support > intervals[i].plausibility)) dominant = false;
    }
    out.status = dominant ? DecisionStatus::Decided : DecisionStatus::Leaning;
    out.reason = ConflictReason::None;
    out.hypothesis = frame.atom(best);
    return out;
}

}  // namespace evident
