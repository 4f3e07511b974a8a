#include "hopfq/group_cohomology.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>

#include "hopfq/error.hpp"

namespace hopfq {

GroupCochain::GroupCochain(FiniteGroup g, int arity, std::vector<Scalar> table)
    : group_(std::move(g)), arity_(arity), table_(std::move(table)) {
  std::size_t size = 1;
  for (int i = 0; i < arity_; ++i) size *= group_.order();
  if (arity_ < 0 || table_.size() != size) raise(ErrorKind::SchemaError, "cochain table has the wrong size");
  for (std::size_t i = 0; i < size; ++i) {
    if (table_[i].is_zero()) raise(ErrorKind::SchemaError, "cochain takes the value 0");
  }
}

GroupCochain GroupCochain::constant(const FiniteGroup& g, int arity, const Scalar& c) {
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) size *= g.order();
  return GroupCochain(g, arity, std::vector<Scalar>(size, c));
}

GroupCochain GroupCochain::from_function(const FiniteGroup& g, int arity,
                                         const std::function<Scalar(const Args&)>& f) {
  GroupCochain out = constant(g, arity);
  for (std::size_t i = 0; i < out.table_.size(); ++i) out.table_[i] = f(out.unflat(i));
  for (const auto& v : out.table_) {
    if (v.is_zero()) raise(ErrorKind::SchemaError, "cochain takes the value 0");
  }
  return out;
}

std::size_t GroupCochain::flat(const Args& args) const {
  if (static_cast<int>(args.size()) != arity_) raise(ErrorKind::ArityMismatch, "wrong number of cochain arguments");
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * group_.order() + a;
  return idx;
}

GroupCochain::Args GroupCochain::unflat(std::size_t idx) const {
  Args args(static_cast<std::size_t>(arity_));
  for (int i = arity_ - 1; i >= 0; --i) {
    args[static_cast<std::size_t>(i)] = static_cast<Elem>(idx % group_.order());
    idx /= group_.order();
  }
  return args;
}

GroupCochain GroupCochain::inverse() const {
  GroupCochain out = *this;
  for (auto& v : out.table_) v = series_invert(v);
  return out;
}

bool GroupCochain::is_constant_one() const {
  return std::all_of(table_.begin(), table_.end(), [](const Scalar& v) { return v.is_one(); });
}

std::optional<std::string> GroupCochain::first_nontrivial() const {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i].is_one()) continue;
    std::string w = "(";
    const Args args = unflat(i);
    for (std::size_t k = 0; k < args.size(); ++k) w += (k ? "," : "") + group_.label(args[k]);
    return w + ") = " + table_[i].str();
  }
  return std::nullopt;
}

GroupCochain group_coboundary(const GroupCochain& phi) {
  const FiniteGroup& g = phi.group();
  const int n = phi.arity();
  return GroupCochain::from_function(g, n + 1, [&](const GroupCochain::Args& x) {
    Scalar num(1);
    Scalar den(1);
    for (int i = 0; i <= n + 1; ++i) {
      GroupCochain::Args y;
      if (i == 0) {
        y.assign(x.begin() + 1, x.end());
      } else if (i == n + 1) {
        y.assign(x.begin(), x.end() - 1);
      } else {
        for (int k = 0; k < n + 1; ++k) {
          if (k == i - 1) {
            y.push_back(g.mul(x[static_cast<std::size_t>(k)], x[static_cast<std::size_t>(k + 1)]));
            ++k;
          } else {
            y.push_back(x[static_cast<std::size_t>(k)]);
          }
        }
      }
      (i % 2 == 0 ? num : den) *= phi(y);
    }
    return num / den;
  });
}

bool is_cocycle(const GroupCochain& f) {
  if (f.arity() != 2) raise(ErrorKind::ArityMismatch, "is_cocycle expects a 2-cochain");
  const FiniteGroup& g = f.group();
  const auto n = static_cast<GroupCochain::Elem>(g.order());
  for (GroupCochain::Elem a = 0; a < n; ++a) {
    for (GroupCochain::Elem b = 0; b < n; ++b) {
      for (GroupCochain::Elem c = 0; c < n; ++c) {
        if (!(f({a, b}) * f({g.mul(a, b), c}) == f({a, g.mul(b, c)}) * f({b, c}))) return false;
      }
    }
  }
  return true;
}

bool is_unital(const GroupCochain& f) {
  if (f.arity() != 2) raise(ErrorKind::ArityMismatch, "is_unital expects a 2-cochain");
  const FiniteGroup& g = f.group();
  const auto e = g.identity();
  for (GroupCochain::Elem a = 0; a < g.order(); ++a) {
    if (!f({e, a}).is_one() || !f({a, e}).is_one()) return false;
  }
  return true;
}

TwistedGroupAlgebra twisted_group_algebra(const FiniteGroup& g, const GroupCochain& f) {
  if (f.arity() != 2) raise(ErrorKind::ArityMismatch, "twist must be a 2-cochain");
  if (!is_unital(f)) raise(ErrorKind::NotUnital, "twisting cochain is not unital");
  const auto n = static_cast<std::uint32_t>(g.order());
  AlgebraPresentation a;
  a.name = "k_F" + g.name();
  a.basis = g.labels();
  a.mult.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) a.mult[x * n + y] = SparseVec{{g.mul(x, y), f({x, y})}};
  }
  a.unit = SparseVec{{g.identity(), Scalar(1)}};
  GroupCochain phi = group_coboundary(f);
  if (phi.is_constant_one()) {
    a.assoc = Assoc::Associative;
  } else {
    // (x*y)*z = ∂F(x,y,z)^{-1} x*(y*z)
    a.assoc = Assoc::Quasi;
    a.associator.resize(static_cast<std::size_t>(n) * n * n);
    for (std::uint32_t t = 0; t < n * n * n; ++t) {
      a.associator[t] = SparseVec{{t, series_invert(phi.table()[t])}};
    }
  }
  return TwistedGroupAlgebra{std::move(a), f, std::move(phi)};
}

namespace {

constexpr std::array<std::array<int, 3>, 7> kFanoLines = {{
    {6, 1, 7}, {7, 2, 5}, {5, 3, 6}, {2, 4, 6}, {3, 4, 7}, {1, 4, 5}, {1, 2, 3},
}};

}  // namespace

Octonions fano_octonions() {
  FiniteGroup g = z2_cubed();
  std::vector<Scalar> table(64, Scalar(1));
  for (int i = 1; i < 8; ++i) table[static_cast<std::size_t>(i * 8 + i)] = Scalar(-1);
  for (const auto& line : kFanoLines) {
    for (int r = 0; r < 3; ++r) {
      const int a = line[r];
      const int b = line[(r + 1) % 3];
      const int c = line[(r + 2) % 3];
      if (g.mul(static_cast<FiniteGroup::Elem>(a), static_cast<FiniteGroup::Elem>(b)) != static_cast<FiniteGroup::Elem>(c)) {
        raise(ErrorKind::InvalidGroup, "Fano line inconsistent with the Z2^3 labelling");
      }
      table[static_cast<std::size_t>(a * 8 + b)] = Scalar(1);
      table[static_cast<std::size_t>(b * 8 + a)] = Scalar(-1);
    }
  }
  GroupCochain f(g, 2, std::move(table));
  TwistedGroupAlgebra alg = twisted_group_algebra(g, f);
  alg.algebra.name = "O";
  std::vector<std::string> labels = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  alg.algebra.basis = labels;
  return Octonions{std::move(g), std::move(f), std::move(alg)};
}

std::string octonion_csv(const Octonions& o) {
  std::ostringstream out;
  out << "i,j,k,sign\n";
  for (std::uint32_t i = 0; i < 8; ++i) {
    for (std::uint32_t j = 0; j < 8; ++j) {
      const auto& p = o.algebra.algebra.product(i, j);
      out << i << ',' << j << ',' << p[0].first << ',' << (p[0].second.is_one() ? 1 : -1) << '\n';
    }
  }
  return out.str();
}

Report octonion_suite(std::uint64_t seed, int random_pairs) {
  const Octonions o = fano_octonions();
  const AlgebraPresentation& a = o.algebra.algebra;
  const GroupCochain& phi = o.algebra.associator;
  Report r;
  r.name = "octonions";
  r.seed = seed;
  auto e = [](std::uint32_t i) { return SparseVec{{i, Scalar(1)}}; };
  auto norm = [](const SparseVec& x) {
    Scalar s;
    for (const auto& [i, c] : x) s += c * c;
    return s;
  };
  auto diff = [](const SparseVec& x, const SparseVec& y) { return axpy(x, Scalar(-1), y).size(); };

  Tally quasi;
  std::size_t minus_one = 0;
  std::string witness;
  for (std::uint32_t i = 0; i < 8; ++i) {
    for (std::uint32_t j = 0; j < 8; ++j) {
      for (std::uint32_t k = 0; k < 8; ++k) {
        const SparseVec left = a.multiply(e(i), a.product(j, k));
        const SparseVec right = scale(a.multiply(a.product(i, j), e(k)), phi({i, j, k}));
        quasi.record(diff(left, right), a.basis[i] + "," + a.basis[j] + "," + a.basis[k]);
        if (phi({i, j, k}) == Scalar(-1)) {
          if (minus_one++ == 0) witness = a.basis[i] + "," + a.basis[j] + "," + a.basis[k];
        }
      }
    }
  }
  quasi.into(r, "quasi-associativity");
  r.add_expect_nonzero("non-associative", minus_one, "∂F = -1 at (" + witness + ")");
  r.add_expect_nonzero("twist-not-cocycle", is_cocycle(o.twist) ? 0 : 1);

  Tally squares;
  for (std::uint32_t i = 1; i < 8; ++i) {
    squares.record(diff(a.product(i, i), scale(e(0), Scalar(-1))), a.basis[i]);
  }
  squares.into(r, "imaginary-units-square-to-minus-one");

  auto alternative = [&](const SparseVec& x, const SparseVec& y) {
    const SparseVec xx = a.multiply(x, x);
    return diff(a.multiply(x, a.multiply(x, y)), a.multiply(xx, y)) +
           diff(a.multiply(a.multiply(y, x), x), a.multiply(y, xx));
  };
  auto norm_mult = [&](const SparseVec& x, const SparseVec& y) {
    return norm(a.multiply(x, y)) == norm(x) * norm(y) ? std::size_t{0} : std::size_t{1};
  };
  Tally alt_basis;
  Tally norm_basis;
  for (std::uint32_t i = 0; i < 8; ++i) {
    for (std::uint32_t j = 0; j < 8; ++j) {
      const std::string w = a.basis[i] + "," + a.basis[j];
      alt_basis.record(alternative(e(i), e(j)), w);
      norm_basis.record(norm_mult(e(i), e(j)), w);
    }
  }
  alt_basis.into(r, "alternative-basis");
  norm_basis.into(r, "norm-multiplicative-basis");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  auto random_vec = [&] {
    std::vector<Scalar> v(8);
    for (auto& c : v) c = Scalar(Rational(num(rng), den(rng)));
    return to_sparse(v);
  };
  Tally alt_rand;
  Tally norm_rand;
  for (int t = 0; t < random_pairs; ++t) {
    const SparseVec x = random_vec();
    const SparseVec y = random_vec();
    alt_rand.record(alternative(x, y), "pair " + std::to_string(t));
    norm_rand.record(norm_mult(x, y), "pair " + std::to_string(t));
  }
  alt_rand.into(r, "alternative-random");
  norm_rand.into(r, "norm-multiplicative-random");
  return r;
}

TorusCochain::TorusCochain(Rational theta, int window) : theta_(std::move(theta)), window_(window) {
  if (window < 1) raise(ErrorKind::WindowOverflow, "torus window must be positive");
  p_ = theta_.numerator().get_si();
  conductor_ = static_cast<int>(2 * theta_.denominator().get_si());
}

long long TorusCochain::exponent(int j, int k, int m, int n) const {
  const long long e = p_ * (static_cast<long long>(j) * n - static_cast<long long>(k) * m);
  return ((e % conductor_) + conductor_) % conductor_;
}

Cyclotomic TorusCochain::value(int j, int k, int m, int n) const {
  return Cyclotomic::root_of_unity(exponent(j, k, m, n), conductor_);
}

bool TorusCochain::is_cocycle() const {
  // z(2q, .) is injective on Z/2q, so the multiplicative identity is the
  // additive one on exponents
  const int w = window_;
  for (int a1 = -w; a1 <= w; ++a1) {
    for (int a2 = -w; a2 <= w; ++a2) {
      for (int b1 = -w; b1 <= w; ++b1) {
        for (int b2 = -w; b2 <= w; ++b2) {
          for (int c1 = -w; c1 <= w; ++c1) {
            for (int c2 = -w; c2 <= w; ++c2) {
              const long long lhs = exponent(a1, a2, b1, b2) + exponent(a1 + b1, a2 + b2, c1, c2);
              const long long rhs = exponent(a1, a2, b1 + c1, b2 + c2) + exponent(b1, b2, c1, c2);
              if ((lhs - rhs) % conductor_ != 0) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool TorusCochain::is_unital() const {
  for (int j = -window_; j <= window_; ++j) {
    for (int k = -window_; k <= window_; ++k) {
      if (exponent(0, 0, j, k) != 0 || exponent(j, k, 0, 0) != 0) return false;
    }
  }
  return true;
}

std::uint32_t TorusCochain::index(int j, int k) const {
  if (std::abs(j) > window_ || std::abs(k) > window_) raise(ErrorKind::WindowOverflow, "outside torus window");
  return static_cast<std::uint32_t>((j + window_) * (2 * window_ + 1) + (k + window_));
}

AlgebraPresentation TorusCochain::algebra() const {
  const int side = 2 * window_ + 1;
  const auto d = static_cast<std::uint32_t>(side * side);
  AlgebraPresentation a;
  a.name = "T_" + theta_.str();
  for (int j = -window_; j <= window_; ++j) {
    for (int k = -window_; k <= window_; ++k) a.basis.push_back("U^" + std::to_string(j) + "V^" + std::to_string(k));
  }
  a.mult.resize(static_cast<std::size_t>(d) * d);
  for (int j = -window_; j <= window_; ++j) {
    for (int k = -window_; k <= window_; ++k) {
      for (int m = -window_; m <= window_; ++m) {
        for (int n = -window_; n <= window_; ++n) {
          if (std::abs(j + m) > window_ || std::abs(k + n) > window_) continue;
          a.mult[index(j, k) * d + index(m, n)] = SparseVec{{index(j + m, k + n), Scalar(value(j, k, m, n))}};
        }
      }
    }
  }
  a.unit = SparseVec{{index(0, 0), Scalar(1)}};
  a.assoc = Assoc::Unchecked;
  return a;
}

Report torus_suite(const Rational& theta, int window) {
  const TorusCochain f(theta, window);
  Report r;
  r.name = "torus(" + theta.str() + ")";
  r.add("cocycle-window-" + std::to_string(window), f.is_cocycle() ? 0 : 1, "", 1);
  r.add("unital", f.is_unital() ? 0 : 1, "", 1);
  // the same identity in cyclotomic arithmetic on a small window
  Tally cyc;
  const int w = std::min(window, 2);
  for (int a1 = -w; a1 <= w; ++a1) {
    for (int a2 = -w; a2 <= w; ++a2) {
      for (int b1 = -w; b1 <= w; ++b1) {
        for (int b2 = -w; b2 <= w; ++b2) {
          for (int c1 = -w; c1 <= w; ++c1) {
            for (int c2 = -w; c2 <= w; ++c2) {
              const Cyclotomic lhs = f.value(a1, a2, b1, b2) * f.value(a1 + b1, a2 + b2, c1, c2);
              const Cyclotomic rhs = f.value(a1, a2, b1 + c1, b2 + c2) * f.value(b1, b2, c1, c2);
              cyc.record(lhs == rhs ? 0 : 1, "");
            }
          }
        }
      }
    }
  }
  cyc.into(r, "cocycle-cyclotomic-window-" + std::to_string(w));
  const AlgebraPresentation a = f.algebra();
  const std::uint32_t u = f.index(1, 0);
  const std::uint32_t v = f.index(0, 1);
  const Scalar q = Scalar(Cyclotomic::root_of_unity(theta.numerator().get_si(), theta.denominator().get_si()));
  const std::size_t res = axpy(a.product(u, v), -q, a.product(v, u)).size();
  r.add("UV=e^{2πiθ}VU", res, res ? render(a.basis, a.product(u, v), 1) : "", 1);
  return r;
}

}  // namespace hopfq
