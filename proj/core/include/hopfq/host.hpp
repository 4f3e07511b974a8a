#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfq/presentation.hpp"

namespace hopfq {

/// One term a ⊗ b of a coproduct.
struct CoTerm {
  std::uint32_t left;
  std::uint32_t right;
  Scalar coeff;
};

/// Hopf algebra given by a finite presentation, prepared for the leg
/// calculus of LegTensor. Detects two structural shortcuts:
///   diagonal  - basis of orthogonal idempotents (k^G in delta functions);
///   grouplike - basis of grouplikes closed under products (kG).
class FiniteHost {
 public:
  using Key = std::uint32_t;

  explicit FiniteHost(HopfPresentation h);

  const HopfPresentation& presentation() const noexcept { return h_; }
  const std::string& name() const noexcept { return h_.name(); }
  std::size_t dim() const noexcept { return h_.dim(); }
  bool finite() const noexcept { return true; }

  const SparseVec& multiply(Key a, Key b) const { return h_.algebra.product(a, b); }
  const std::vector<CoTerm>& coproduct(Key a) const;
  const Scalar& counit(Key a) const { return h_.coalgebra.counit[a]; }
  const SparseVec& unit() const noexcept { return h_.algebra.unit; }
  SparseVec antipode(Key a) const;

  bool diagonal() const noexcept { return diagonal_; }
  bool grouplike() const noexcept { return grouplike_; }
  /// Inverse basis element (grouplike hosts only).
  Key inverse_key(Key a) const { return inverse_[a]; }

  /// Elements whose iterated coproducts are tested for invariance.
  std::vector<Key> generators() const;
  std::string label(Key a) const { return h_.algebra.basis[a]; }

 private:
  HopfPresentation h_;
  std::vector<std::vector<CoTerm>> coproduct_;
  std::vector<bool> coproduct_ok_;
  bool diagonal_ = false;
  bool grouplike_ = false;
  std::vector<Key> inverse_;
};

}  // namespace hopfq
