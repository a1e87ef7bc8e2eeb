#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "msr/point.hpp"
#include "msr/solver.hpp"
#include "msr/tolerances.hpp"

namespace msr {

// Size guards keeping exhaustive enumeration tractable.
inline constexpr int kOracleMaxN2 = 14;
inline constexpr int kOracleMaxN3 = 10;

struct BruteOptions {
  bool force = false;  // overrides the size guard
  std::uint64_t seed = kDefaultSeed;
};

// Ground truth by exhaustive enumeration: every assignment of points to k
// labels (point 0 pinned to label 0 to cut the label symmetry), each cluster
// scored by its MEB. Throws SizeGuardError above the guard unless forced.
Clustering brute_msr(std::span<const Point> points, int k, const BruteOptions& options = {});

struct SeparatorWitness {
  Direction direction;
  int split_index = 0;
};

// Outcome of one empirical lemma check on one instance.
struct LemmaReport {
  std::string instance_id;
  std::string lemma_id;  // "disjoint-balls" | "k2-separator" | "k3-separator"
  bool holds = false;
  double optimal_cost = 0.0;
  double achieved_cost = 0.0;
  std::optional<SeparatorWitness> witness;
};

// Checks that some optimal clustering has pairwise disjoint cluster balls:
// takes a brute optimum and greedily merges any two clusters whose balls
// still touch, verifying the cost never increases.
LemmaReport check_disjoint_optimum(std::span<const Point> points, int k,
                                   const std::string& instance_id = "",
                                   const BruteOptions& options = {});

// Checks that some orthogonal separator over the candidate directions
// achieves the brute-force optimal cost (k = 2 splits score both sides'
// MEBs; k = 3 splits score the defining-point side plus the brute 2-cluster
// optimum of the rest).
LemmaReport check_separator_lemma(std::span<const Point> points, int k,
                                  const std::string& instance_id = "",
                                  const BruteOptions& options = {});

}  // namespace msr
