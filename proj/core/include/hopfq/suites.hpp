#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/rational.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

inline constexpr std::uint64_t kDefaultSeed = 20260611;

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  /// ħ-truncation order; each suite has its own default.
  std::optional<int> order;
  /// Scalar-grammar θ for heis-torus (in ħC[[ħ]]) or group-cohomology
  /// (rational).
  std::optional<std::string> theta;
};

/// Registered suite names, "all" last.
const std::vector<std::string>& suite_names();

/// verify_hopf over kG (ℤ₂, ℤ₃, ℤ₂³, S₃, D₄, Pauli-8), k^G for the same
/// groups, Taft p = 2, 3, 5, the shuffle bialgebra on two letters up to
/// length 4 and the Pareigis window N = 4.
Report hopf_axioms_suite();

/// Torus cochains on window 5 (θ = 1/2, 1/3, 2/5 unless given) and seeded
/// group cochains on S₃, D₄, ℤ₂³: ∂² = 1, coboundaries are cocycles, and the
/// twisted group algebra is associative exactly when the twist is a cocycle.
Report group_cohomology_suite(std::uint64_t seed, const std::optional<Rational>& theta = std::nullopt);

/// Runs a registered suite and fills in name, seed and elapsed time. Throws
/// UnknownSuite, ParseError or SchemaError for bad input.
Report run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace hopfq
