#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfq/cyclotomic.hpp"
#include "hopfq/group.hpp"
#include "hopfq/presentation.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

/// kG: Δ(g)=g⊗g, ε(g)=1, S(g)=g⁻¹.
HopfPresentation group_algebra(const FiniteGroup& g);
/// k^G on the delta-function basis δ_g (same index order as G).
HopfPresentation dual_group_hopf(const FiniteGroup& g);

/// Taft algebra on the basis g^a x^b (index a*p + b) with g^p = 1, x^p = 0,
/// gx = λxg, Δ(g) = g⊗g, Δ(x) = x⊗g + 1⊗x. Throws NotPrimitiveRoot.
HopfPresentation taft(int p, const Cyclotomic& lambda);

/// Shuffle product and deconcatenation coproduct on words of length at
/// most max_len over an alphabet of size dim_v (letters 1..dim_v).
class ShuffleBialgebra {
 public:
  using Word = std::vector<int>;

  ShuffleBialgebra(int dim_v, int max_len);

  int dim_v() const noexcept { return dim_v_; }
  int max_len() const noexcept { return max_len_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::uint32_t index(const Word& w) const;
  /// Sum over (|w1|,|w2|)-shuffles; LengthOverflow past max_len.
  SparseVec shuffle_product(const Word& w1, const Word& w2) const;
  /// Σ_k w[0,k) ⊗ w[k,n) as a flat arity-2 tensor.
  SparseVec deconcatenate(const Word& w) const;
  /// Windowed Hopf presentation; S(w) = (-1)^{|w|} reverse(w).
  const HopfPresentation& hopf() const noexcept { return hopf_; }

 private:
  int dim_v_;
  int max_len_;
  std::vector<Word> words_;
  std::map<Word, std::uint32_t> index_;
  HopfPresentation hopf_;
};

/// Finite window of the Pareigis Hopf algebra on {g^n, g^n x : |n| <= N},
/// with xg = -gx, x² = 0, Δ(x) = x⊗g + 1⊗x, S(x) = -xg⁻¹.
/// Index of g^n is n + N, of g^n x is 2N + 1 + n + N.
HopfPresentation pareigis_window(int n_window);
std::uint32_t pareigis_g(int n_window, int n);
std::uint32_t pareigis_gx(int n_window, int n);

/// Chain complex over degrees -radius..radius; d[n + radius] : A_n -> A_{n-1}
/// is a dims[n-1] x dims[n] matrix (empty for the lowest degree).
struct ChainComplexWindow {
  int radius = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;

  std::size_t dim(int n) const { return dims.at(static_cast<std::size_t>(n + radius)); }
  const Matrix& differential(int n) const { return d.at(static_cast<std::size_t>(n + radius)); }
  std::size_t total_dim() const;
  /// Offset of degree n in the concatenated basis.
  std::size_t offset(int n) const;
  /// Residual terms of d∘d over all in-window degrees.
  std::size_t dsquared_terms() const;
};

/// Right comodule over a Hopf presentation: coaction[i] is δ(a_i) as a flat
/// tensor over (comodule basis) x (Hopf basis).
struct Comodule {
  std::vector<std::string> basis;
  std::vector<SparseVec> coaction;
};

/// δ(a) = a⊗gⁿ + da⊗gⁿ⁻¹x for a in degree n, over pareigis_window(n_window).
/// Throws NotAComplex if d² ≠ 0 (unless check is false) and WindowOverflow
/// if the complex does not fit inside the window.
Comodule chain_to_comodule(const ChainComplexWindow& c, int n_window, bool check = true);
/// Inverse construction: degrees from the gⁿ components, d from the gⁿ⁻¹x ones.
ChainComplexWindow comodule_to_chain(const Comodule& m, int radius, int n_window);
/// (δ⊗id)δ = (id⊗Δ)δ and (id⊗ε)δ = id on every basis element.
Report verify_comodule(const Comodule& m, const HopfPresentation& h);

/// The pairing <δ_g, h> = [g = h] between k^G and kG dualizes every
/// structure map; checked on all basis pairs.
Report dual_pairing_check(const FiniteGroup& g);

}  // namespace hopfq
