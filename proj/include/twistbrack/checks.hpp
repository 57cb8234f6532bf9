#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistbrack/context.hpp"

namespace twistbrack::checks {

struct Bounds {
  int homological = 3;
  int internal = 3;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, if any
};

using NamedCochain = std::pair<std::string, Cochain>;

// Basis enumeration (k-bases, not bimodule generators).
std::vector<BarTensor> bar_basis(const BarResolution& bar, int degree);
std::vector<KoszulTensor> koszul_basis(int num_variables, int degree, int max_internal);
std::vector<XTensor> x_basis(const Context& ctx, int degree, int max_internal);
/// Spanning set of C (x)_kG C (x) D (x)_S D with c ending in 1 and d ending in 1.
std::vector<PreImage> preimage_basis(const Context& ctx, Bounds bounds);

// Resolutions
CheckResult bar_differential_squared(const Context& ctx, Bounds bounds);
CheckResult koszul_differential_squared(const Context& ctx, Bounds bounds);
CheckResult bar_counit(const Context& ctx, Bounds bounds);
CheckResult koszul_counit(const Context& ctx, Bounds bounds);
CheckResult bar_coassociativity(const Context& ctx, Bounds bounds);
CheckResult koszul_coassociativity(const Context& ctx, Bounds bounds);
CheckResult bar_grading(const Context& ctx, Bounds bounds);
CheckResult koszul_group_compatibility(const Context& ctx, Bounds bounds);
CheckResult contraction_identity(const Context& ctx, Bounds bounds);
CheckResult bar_homotopy_identity(const Context& ctx, Bounds bounds);
CheckResult koszul_homotopy_identity(const Context& ctx, Bounds bounds);
CheckResult koszul_homotopy_determinism(const Context& ctx, Bounds bounds);

// Twisted product
CheckResult x_differential_squared(const Context& ctx, Bounds bounds);
CheckResult x_action_associativity(const Context& ctx, int trials, std::uint64_t seed);
CheckResult x_decompose_round_trip(const Context& ctx, Bounds bounds);
CheckResult x_differential_bimodule(const Context& ctx, int trials, std::uint64_t seed);
CheckResult x_diagonal_counit(const Context& ctx, Bounds bounds);
CheckResult x_diagonal_coassociativity(const Context& ctx, Bounds bounds);
CheckResult x_diagonal_chain_map(const Context& ctx, Bounds bounds);
CheckResult x_homotopy_identity(const Context& ctx, Bounds bounds);
CheckResult x_augmentation_interpolation(const Context& ctx, Bounds bounds);
/// Homology of X vanishes in degrees 1..bounds.homological, per internal degree.
CheckResult x_exactness(const Context& ctx, Bounds bounds);

// Cochains and brackets
CheckResult cochain_bimodule_linearity(const Context& ctx, int trials, std::uint64_t seed);
CheckResult coboundary_squared(const Context& ctx, int trials, std::uint64_t seed);
CheckResult bracket_antisymmetry(const Context& ctx, const std::vector<NamedCochain>& cochains);
CheckResult bracket_of_cocycles_is_cocycle(const Context& ctx, const std::vector<NamedCochain>& cochains);
CheckResult bracket_internal_degree(const Context& ctx, const std::vector<NamedCochain>& cochains);
/// Class-level bracket verdicts agree between ctx and a context using the
/// reversed contraction order.
CheckResult homotopy_robustness(const Context& ctx, const std::vector<NamedCochain>& cochains);

/// Everything above with the given bounds.
std::vector<CheckResult> run_all(const Context& ctx, const std::vector<NamedCochain>& cochains, Bounds bounds,
                                 int trials, std::uint64_t seed);

}  // namespace twistbrack::checks
