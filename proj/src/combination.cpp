#include "evident/combination.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "evident/error.hpp"

namespace evident {

namespace {

void require_same_frame(const MassFunction& m1, const MassFunction& m2) {
    if (!(m1.frame() == m2.frame())) throw Error(ErrorCode::FrameMismatch, "mass functions are on different frames");
}

// Sums in ascending order so the result does not depend on which operand
// produced which term. This is what makes combine() exactly commutative.
double ordered_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

struct Products {
    std::map<std::uint64_t, std::vector<double>> by_target;
    std::vector<double> conflicting;
};

Products pairwise_products(const MassFunction& m1, const MassFunction& m2) {
    Products out;
    for (const auto& b : m1.focals()) {
        for (const auto& c : m2.focals()) {
            const std::uint64_t target = b.proposition.bits() & c.proposition.bits();
            const double product = b.mass * c.mass;
            if (target == 0) {
                out.conflicting.push_back(product);
            } else {
                out.by_target[target].push_back(product);
            }
        }
    }
    return out;
}

}  // namespace

double conflict_mass(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    auto products = pairwise_products(m1, m2);
    return std::clamp(ordered_sum(products.conflicting), 0.0, 1.0);
}

CombinationReport combine(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    auto products = pairwise_products(m1, m2);
    const double conflict = std::clamp(ordered_sum(products.conflicting), 0.0, 1.0);

    std::map<std::uint64_t, double> sums;
    std::vector<double> all_terms;
    for (auto& [target, terms] : products.by_target) {
        all_terms.insert(all_terms.end(), terms.begin(), terms.end());
        sums[target] = ordered_sum(terms);
    }
    // The normalizer is 1 - conflict; summing the surviving products directly
    // keeps the result normalized even when the inputs are only within 1e-9.
    const double normalizer = ordered_sum(all_terms);
    if (conflict >= 1.0 - kTotalConflictTolerance || normalizer <= kTotalConflictTolerance) {
        throw TotalConflictError(1);
    }

    std::map<std::uint64_t, double> normalized;
    for (const auto& [target, sum] : sums) {
        const double value = sum / normalizer;
        if (value >= kPruneBelow) normalized.emplace(target, value);
    }
    return {MassFunction::from_normalized(m1.frame(), std::move(normalized)), conflict};
}

CombinationReport combine_all(std::span<const MassFunction> masses) {
    if (masses.empty()) throw Error(ErrorCode::EmptyInput, "combine_all needs at least one mass function");
    CombinationReport acc{masses.front(), 0.0};
    double retained = 1.0;  // prod(1 - k_i)
    for (std::size_t i = 1; i < masses.size(); ++i) {
        try {
            auto step = combine(acc.result, masses[i]);
            retained *= 1.0 - step.conflict;
            acc.result = std::move(step.result);
        } catch (const TotalConflictError&) {
            throw TotalConflictError(i);
        }
    }
    acc.conflict = std::clamp(1.0 - retained, 0.0, 1.0);
    return acc;
}

MassFunction discount(const MassFunction& m, double factor) {
    if (!(factor >= 0.0 && factor <= 1.0)) throw Error(ErrorCode::FactorOutOfRange, "discount factor must lie in [0, 1]");
    if (factor == 1.0) return m;
    const auto& frame = m.frame();
    std::map<std::uint64_t, double> out;
    for (const auto& focal : m.focals()) {
        if (focal.proposition.is_full()) continue;
        const double scaled = factor * focal.mass;
        if (scaled > 0.0) out[focal.proposition.bits()] = scaled;
    }
    const double on_frame = 1.0 - factor * (1.0 - m.mass(frame.full()));
    if (on_frame > 0.0) out[frame.universe()] = on_frame;
    return MassFunction::from_normalized(frame, std::move(out));
}

}  // namespace evident
