#pragma once
// Dempster's orthogonal sum, its conflict measure and evidence discounting.

#include <span>

#include "evident/error.hpp"
#include "evident/evidence.hpp"

namespace evident {

// Masses below this are dropped from combination results.
inline constexpr double kPruneBelow = 1e-15;
// Conflict within this distance of 1 counts as total conflict.
inline constexpr double kTotalConflictTolerance = 1e-12;

struct CombinationReport {
    MassFunction result;
    // Mass that fell on the empty set before normalization. For a fold this
    // is cumulative: 1 - prod(1 - k_i).
    double conflict = 0.0;
};

// Sum of m1(B) * m2(C) over disjoint focal pairs.
double conflict_mass(const MassFunction& m1, const MassFunction& m2);

// Throws FrameMismatch or TotalConflictError(1).
CombinationReport combine(const MassFunction& m1, const MassFunction& m2);

// Left fold of combine. TotalConflictError carries the index of the input
// that drove the running conflict to 1. Throws EmptyInput on an empty list.
CombinationReport combine_all(std::span<const MassFunction> masses);

// Scales every non-frame mass by `factor` and moves the rest onto the frame.
// Throws FactorOutOfRange.
MassFunction discount(const MassFunction& m, double factor);

}  // namespace evident
