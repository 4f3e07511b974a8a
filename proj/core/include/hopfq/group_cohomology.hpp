#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/group.hpp"
#include "hopfq/presentation.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

/// Nowhere-zero function G^n -> k, stored as a table over flat indices
/// g_1 |G|^{n-1} + ... + g_n.
class GroupCochain {
 public:
  using Elem = FiniteGroup::Elem;
  using Args = std::vector<Elem>;

  /// Throws SchemaError on a zero value or a table of the wrong size.
  GroupCochain(FiniteGroup g, int arity, std::vector<Scalar> table);

  static GroupCochain constant(const FiniteGroup& g, int arity, const Scalar& c = Scalar(1));
  static GroupCochain from_function(const FiniteGroup& g, int arity, const std::function<Scalar(const Args&)>& f);

  const FiniteGroup& group() const noexcept { return group_; }
  int arity() const noexcept { return arity_; }
  const std::vector<Scalar>& table() const noexcept { return table_; }

  std::size_t flat(const Args& args) const;
  Args unflat(std::size_t idx) const;
  const Scalar& operator()(const Args& args) const { return table_[flat(args)]; }

  GroupCochain inverse() const;
  bool is_constant_one() const;
  /// Labels of the first argument tuple where the value differs from 1.
  std::optional<std::string> first_nontrivial() const;

 private:
  FiniteGroup group_;
  int arity_;
  std::vector<Scalar> table_;
};

/// ∂φ(g_1..g_{n+1}) = Π_i φ(..., g_i g_{i+1}, ...)^{(-1)^i}, with the i = 0
/// factor φ(g_2..g_{n+1}) and the i = n+1 factor φ(g_1..g_n).
GroupCochain group_coboundary(const GroupCochain& phi);
/// F(a,b)F(ab,c) = F(a,bc)F(b,c) for all a, b, c.
bool is_cocycle(const GroupCochain& f);
/// F(1,g) = F(g,1) = 1 for all g.
bool is_unital(const GroupCochain& f);

/// k_F G with g*h = F(g,h) gh; quasi-associative (with associator from ∂F)
/// unless F is a cocycle.
struct TwistedGroupAlgebra {
  AlgebraPresentation algebra;
  GroupCochain twist;
  GroupCochain associator;  // ∂F: a*(b*c) = ∂F(a,b,c) (a*b)*c
};

/// Throws NotUnital.
TwistedGroupAlgebra twisted_group_algebra(const FiniteGroup& g, const GroupCochain& f);

/// Octonions as a twist of R[Z2^3]: the sign cochain fixed by the oriented
/// Fano lines (e6,e1,e7), (e7,e2,e5), (e5,e3,e6), (e2,e4,e6), (e3,e4,e7),
/// (e1,e4,e5), (e1,e2,e3), with e_a e_b = e_c = -e_b e_a along each line
/// (and cyclic permutations) and e_i² = -1.
struct Octonions {
  FiniteGroup group;
  GroupCochain twist;
  TwistedGroupAlgebra algebra;
};
Octonions fano_octonions();
/// Rows "i,j,k,sign" with e_i * e_j = sign * e_k (0 = unit).
std::string octonion_csv(const Octonions& o);
/// Quasi-associativity on all triples, alternativity and norm
/// multiplicativity on basis pairs and `random_pairs` seeded rational vectors,
/// a non-associative witness and the failing cocycle condition.
Report octonion_suite(std::uint64_t seed, int random_pairs = 100);

/// F(U^j V^k, U^m V^n) = exp(πiθ(jn - km)) on Z², a unital 2-cocycle. Values
/// are 2q-th roots of unity for θ = p/q.
class TorusCochain {
 public:
  TorusCochain(Rational theta, int window);

  const Rational& theta() const noexcept { return theta_; }
  int window() const noexcept { return window_; }
  int conductor() const noexcept { return conductor_; }
  /// Exponent e with F = z(2q, e), reduced mod 2q.
  long long exponent(int j, int k, int m, int n) const;
  Cyclotomic value(int j, int k, int m, int n) const;

  /// Exhaustive over the window (exponent arithmetic in Z/2q).
  bool is_cocycle() const;
  bool is_unital() const;
  /// The twisted algebra on basis U^j V^k, |j|,|k| <= window; products
  /// leaving the window are absent.
  AlgebraPresentation algebra() const;
  std::uint32_t index(int j, int k) const;

 private:
  Rational theta_;
  int window_;
  int conductor_;
  long long p_;
};

/// Cocycle, unitality and U*V = e^{2πiθ} V*U for the given θ.
Report torus_suite(const Rational& theta, int window);

}  // namespace hopfq
