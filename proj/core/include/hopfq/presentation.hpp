#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/linalg.hpp"

namespace hopfq {

enum class Assoc { Associative, Quasi, Unchecked };

/// Finite-dimensional algebra by structure constants. Elements of A are
/// SparseVecs over basis indices; elements of A^{⊗k} use the flat index
/// i_1 d^{k-1} + ... + i_k.
///
/// A product entry may be absent when the presentation is a finite window of
/// an infinite-dimensional algebra and the product leaves the window.
struct AlgebraPresentation {
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::optional<SparseVec>> mult;  // d*d entries
  SparseVec unit;
  Assoc assoc = Assoc::Associative;
  /// For Assoc::Quasi: image of each basis triple under the associator, so
  /// that (x*y)*z = m(id ⊗ m)(Phi . (x ⊗ y ⊗ z)). d^3 entries over flat
  /// triple indices.
  std::vector<SparseVec> associator;

  std::size_t dim() const noexcept { return basis.size(); }
  /// Product of basis elements; WindowOverflow if it leaves the window.
  const SparseVec& product(std::uint32_t i, std::uint32_t j) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  /// Applies m ⊗ ... to a flat tensor of arity 2.
  SparseVec multiply_flat(const SparseVec& xy) const;
};

struct CoalgebraPresentation {
  std::vector<std::string> basis;
  std::vector<std::optional<SparseVec>> coproduct;  // per basis element, flat d*d
  std::vector<Scalar> counit;

  std::size_t dim() const noexcept { return basis.size(); }
  const SparseVec& delta(std::uint32_t i) const;
  SparseVec apply_delta(const SparseVec& x) const;
  Scalar apply_counit(const SparseVec& x) const;
};

struct HopfPresentation {
  AlgebraPresentation algebra;
  CoalgebraPresentation coalgebra;
  /// antipode[r][c] = coefficient of e_r in S(e_c)
  std::optional<Matrix> antipode;
  /// For windowed presentations: antipode_window[c] is false when S(e_c)
  /// leaves the window (its matrix column is then meaningless). Empty = total.
  std::vector<bool> antipode_window;
  bool commutative = false;
  bool cocommutative = false;

  const std::string& name() const noexcept { return algebra.name; }
  std::size_t dim() const noexcept { return algebra.dim(); }
  SparseVec apply_antipode(const SparseVec& x) const;
};

/// Linear map C -> A as a dense matrix: map[r][c] = coefficient of a_r in f(c_c).
using LinearMap = Matrix;

LinearMap identity_map(std::size_t d);
SparseVec apply_map(const LinearMap& f, const SparseVec& x);
/// f ⋆ g = m (f ⊗ g) Δ.
LinearMap convolution(const CoalgebraPresentation& c, const AlgebraPresentation& a, const LinearMap& f,
                      const LinearMap& g);
/// b ↦ ε(b) 1
LinearMap unit_counit(const CoalgebraPresentation& c, const AlgebraPresentation& a);

/// Flat-index helpers for tensor powers of a d-dimensional space.
inline std::uint32_t flat2(std::uint32_t i, std::uint32_t j, std::uint32_t d) { return i * d + j; }
inline std::uint32_t flat3(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t d) {
  return (i * d + j) * d + k;
}
/// x ⊗ y for elements of V^{⊗p} and V^{⊗q}; dq is dim(V)^q.
SparseVec tensor(const SparseVec& x, const SparseVec& y, std::uint32_t dq);

/// Label of a flat tensor index, e.g. "g⊗x".
std::string flat_label(const std::vector<std::string>& basis, std::uint32_t idx, int arity);
/// Human-readable rendering of a flat tensor.
std::string render(const std::vector<std::string>& basis, const SparseVec& v, int arity);

}  // namespace hopfq
