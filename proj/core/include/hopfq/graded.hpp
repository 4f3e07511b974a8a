#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfq/group.hpp"
#include "hopfq/presentation.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

/// Algebra graded by a finite group or by ℤ. A ℤ-grading is a window: only
/// degrees in [-radius, radius] are present, and products leaving the window
/// are absent from the presentation. Degrees are group element indices in
/// the finite case and integers in the ℤ case.
struct GradedAlgebra {
  AlgebraPresentation algebra;
  std::optional<FiniteGroup> group;
  int radius = 0;
  std::vector<int> degree;

  bool z_graded() const noexcept { return !group.has_value(); }
  /// All degrees: group elements, or -radius..radius.
  std::vector<int> degrees() const;
  int identity() const;
  int inverse(int g) const;
  /// gh, or nothing when it leaves the window.
  std::optional<int> combine(int g, int h) const;
  std::string degree_label(int g) const;
  /// Basis indices of A_g.
  std::vector<std::uint32_t> component(int g) const;
};

/// Throws NotHomogeneous unless A_g A_h ⊂ A_{gh} on basis elements.
void check_homogeneous(const GradedAlgebra& a);

/// 1 = Σ ξ_i η_i with ξ_i ∈ A_{g⁻¹}, η_i ∈ A_g.
struct UnityResolution {
  int degree = 0;
  std::vector<std::pair<SparseVec, SparseVec>> pairs;
};

std::optional<UnityResolution> resolution_of_unity(const GradedAlgebra& a, int g);

struct StrongGradingVerdict {
  bool strong = false;
  std::optional<int> failing_degree;
  std::vector<UnityResolution> resolutions;
};

/// Finite G: a resolution of unity in every degree. ℤ-window: degrees ±1
/// only, which suffices for ℤ.
StrongGradingVerdict strong_grading(const GradedAlgebra& a);

/// ψ: A ⊗_B A → A ⊗ kG, a ⊗ b ↦ Σ_g a b_g ⊗ g, with B = A_e.
struct CanonicalMap {
  std::size_t dim_tensor = 0;    // dim A⊗A
  std::size_t dim_balanced = 0;  // dim A⊗_B A
  std::size_t dim_target = 0;    // dim A⊗kG
  std::size_t rank = 0;
  bool well_defined = false;
  bool bijective = false;
  bool agrees_with_strong_grading = false;
  /// ψ(x_i ⊗ x_j) over the flat target index a·|G| + g, per flat pair i·d + j.
  std::vector<SparseVec> matrix;
};

/// Finite grading groups only (SchemaError otherwise).
CanonicalMap canonical_map(const GradedAlgebra& a);

/// B ⋊_α G on the basis b ⊗ g (flat index b·|G| + g), with
/// (a⊗g)(b⊗h) = a α_g(b) ⊗ gh. Throws NotAutomorphism or NotAction.
GradedAlgebra crossed_product(const AlgebraPresentation& b, const FiniteGroup& g, const std::vector<LinearMap>& alpha);
/// B ⋊_α ℤ windowed to degrees [-radius, radius], for an automorphism α.
GradedAlgebra z_crossed_product(const AlgebraPresentation& b, const LinearMap& alpha, int radius);

/// A_{g⁻¹} ⊗_{A_e} A_g → A_e by multiplication: well-defined, bijective,
/// inverse a ↦ Σ aξ_i ⊗ η_i, and the compatibilities (ab)c = a(bc) for
/// a, c ∈ A_g, b ∈ A_{g⁻¹} and b(cd) = (bc)d for b, d ∈ A_{g⁻¹}, c ∈ A_g.
Report smeb_check(const GradedAlgebra& a, int g);

/// Terms of span(A_g A_{g⁻¹}) that fail closure under A_e on either side.
std::size_t ideal_residual(const GradedAlgebra& a, int g, std::string* witness = nullptr);

/// ℤ-window: A_h A_k = A_{h+k} for all in-window h, k, h + k.
Report window_products(const GradedAlgebra& a);

struct NamedGraded {
  GradedAlgebra algebra;
  bool expected_strong = false;
};

/// kℤ₂, kℤ₃, kS₃, M₂(k) ⋊ ℤ₂, (k×k) ⋊ ℤ₂, M₂(k) with checkerboard grading,
/// and the negatives k[x]/(x²), upper triangular matrices, k×k with trivial
/// ℤ₂-grading; plus ℤ-windows of k[t,t⁻¹], (k×k) ⋊ ℤ and k[t,s]/(ts,st).
std::vector<NamedGraded> graded_battery(int radius = 3);

Report graded_galois_suite();

using WeightVector = std::vector<std::int64_t>;

/// ℓ^♯_i = Π_{j≠i} ℓ_j. Throws SchemaError on an empty or nonpositive ℓ.
WeightVector sharp(const WeightVector& l);
bool is_coprime(const WeightVector& l);
bool is_pairwise_coprime(const WeightVector& l);
/// (ℓ^♯)^♯ = (ℓ₀⋯ℓ_n)^{n-1} ℓ and (ℓ^♯ coprime ⟺ ℓ pairwise coprime).
Report sharp_laws(const WeightVector& l);

/// Worked examples and sharp_laws for every ℓ with entries and length ≤ 4.
Report sharp_map_suite();

}  // namespace hopfq
