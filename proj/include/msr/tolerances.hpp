#pragma once

namespace msr {

// Relative containment / boundary tolerance for ball queries.
inline constexpr double kEpsContain = 1e-9;
inline constexpr double kEpsBoundary = 1e-9;

// Absolute floor applied alongside the relative tolerances.
inline constexpr double kEpsAbs = 1e-12;

// Relative tolerance for radius comparisons between two MEB computations.
inline constexpr double kEpsRadius = 1e-9;

// Pivot guard for the circumball linear solve: a pivot smaller than
// kPivotGuard times the system scale means the boundary points are
// affinely degenerate and the caller must fall back to a lower rank.
inline constexpr double kPivotGuard = 1e-12;

// Angular tolerance (radians) under which two candidate directions are
// considered duplicates.
inline constexpr double kEpsDirection = 1e-9;

// Default seed for every solver entry point and the CLI.
inline constexpr unsigned long long kDefaultSeed = 0xC0FFEE;

}  // namespace msr
