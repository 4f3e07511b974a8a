#include "hopfq/graded.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "hopfq/constructors.hpp"
#include "hopfq/error.hpp"
#include "hopfq/hopf_verify.hpp"

namespace hopfq {

namespace {

SparseVec e(std::uint32_t i) { return SparseVec{{i, Scalar(1)}}; }

std::size_t diff_terms(const SparseVec& x, const SparseVec& y) { return axpy(x, Scalar(-1), y).size(); }

const std::optional<SparseVec>& entry(const AlgebraPresentation& a, std::uint32_t i, std::uint32_t j) {
  return a.mult[static_cast<std::size_t>(i) * a.dim() + j];
}

/// Span of the present products x·y, x ∈ xs, y ∈ ys.
RowEchelon product_span(const AlgebraPresentation& a, const std::vector<std::uint32_t>& xs,
                        const std::vector<std::uint32_t>& ys) {
  RowEchelon ech;
  std::uint32_t tag = 0;
  for (auto x : xs) {
    for (auto y : ys) {
      if (const auto& p = entry(a, x, y)) ech.insert(*p, tag);
      ++tag;
    }
  }
  return ech;
}

AlgebraPresentation ground_field() {
  AlgebraPresentation k;
  k.name = "k";
  k.basis = {"1"};
  k.mult = {e(0)};
  k.unit = e(0);
  return k;
}

/// k×k on the idempotents e1, e2.
AlgebraPresentation split_pair() {
  AlgebraPresentation a;
  a.name = "k×k";
  a.basis = {"e1", "e2"};
  a.mult = {e(0), SparseVec{}, SparseVec{}, e(1)};
  a.unit = {{0, Scalar(1)}, {1, Scalar(1)}};
  return a;
}

/// M₂(k) on E11, E12, E21, E22 (index 2i + j).
AlgebraPresentation matrix_algebra() {
  AlgebraPresentation a;
  a.name = "M2(k)";
  a.basis = {"E11", "E12", "E21", "E22"};
  a.mult.resize(16);
  for (std::uint32_t i = 0; i < 2; ++i) {
    for (std::uint32_t j = 0; j < 2; ++j) {
      for (std::uint32_t k = 0; k < 2; ++k) {
        for (std::uint32_t l = 0; l < 2; ++l) {
          a.mult[(2 * i + j) * 4 + 2 * k + l] = j == k ? e(2 * i + l) : SparseVec{};
        }
      }
    }
  }
  a.unit = {{0, Scalar(1)}, {3, Scalar(1)}};
  return a;
}

/// Permutation matrix sending basis element c to perm[c].
LinearMap permutation_map(const std::vector<std::uint32_t>& perm) {
  LinearMap m(perm.size(), std::vector<Scalar>(perm.size()));
  for (std::size_t c = 0; c < perm.size(); ++c) m[perm[c]][c] = Scalar(1);
  return m;
}

void check_automorphism(const AlgebraPresentation& b, const LinearMap& f, const std::string& what) {
  const auto d = static_cast<std::uint32_t>(b.dim());
  if (f.size() != d || std::any_of(f.begin(), f.end(), [d](const auto& row) { return row.size() != d; })) {
    raise(ErrorKind::NotAutomorphism, what + " has the wrong shape");
  }
  if (apply_map(f, b.unit) != b.unit) raise(ErrorKind::NotAutomorphism, what + " is not unital");
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const SparseVec lhs = apply_map(f, b.product(i, j));
      const SparseVec rhs = b.multiply(apply_map(f, e(i)), apply_map(f, e(j)));
      if (lhs != rhs) {
        raise(ErrorKind::NotAutomorphism, what + " is not multiplicative at " + b.basis[i] + "," + b.basis[j]);
      }
    }
  }
  if (rank(f) != d) raise(ErrorKind::NotAutomorphism, what + " is not bijective");
}

GradedAlgebra finite_graded(AlgebraPresentation a, const FiniteGroup& g, std::vector<int> degree) {
  GradedAlgebra out;
  out.algebra = std::move(a);
  out.group = g;
  out.degree = std::move(degree);
  return out;
}

GradedAlgebra group_graded(const FiniteGroup& g) {
  std::vector<int> degree(g.order());
  std::iota(degree.begin(), degree.end(), 0);
  return finite_graded(group_algebra(g).algebra, g, std::move(degree));
}

}  // namespace

std::vector<int> GradedAlgebra::degrees() const {
  std::vector<int> out;
  if (group) {
    for (std::size_t g = 0; g < group->order(); ++g) out.push_back(static_cast<int>(g));
  } else {
    for (int n = -radius; n <= radius; ++n) out.push_back(n);
  }
  return out;
}

int GradedAlgebra::identity() const { return group ? static_cast<int>(group->identity()) : 0; }

int GradedAlgebra::inverse(int g) const {
  return group ? static_cast<int>(group->inverse(static_cast<FiniteGroup::Elem>(g))) : -g;
}

std::optional<int> GradedAlgebra::combine(int g, int h) const {
  if (group) return static_cast<int>(group->mul(static_cast<FiniteGroup::Elem>(g), static_cast<FiniteGroup::Elem>(h)));
  if (std::abs(g + h) > radius) return std::nullopt;
  return g + h;
}

std::string GradedAlgebra::degree_label(int g) const {
  return group ? group->label(static_cast<FiniteGroup::Elem>(g)) : std::to_string(g);
}

std::vector<std::uint32_t> GradedAlgebra::component(int g) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < degree.size(); ++i) {
    if (degree[i] == g) out.push_back(i);
  }
  return out;
}

void check_homogeneous(const GradedAlgebra& a) {
  const auto d = static_cast<std::uint32_t>(a.algebra.dim());
  if (a.degree.size() != d) raise(ErrorKind::NotHomogeneous, "degree list does not match the basis");
  for (int g : a.degree) {
    const bool ok = a.group ? g >= 0 && static_cast<std::size_t>(g) < a.group->order() : std::abs(g) <= a.radius;
    if (!ok) raise(ErrorKind::NotHomogeneous, "degree " + std::to_string(g) + " is not in the grading group");
  }
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const auto& p = entry(a.algebra, i, j);
      if (!p) continue;
      const auto gh = a.combine(a.degree[i], a.degree[j]);
      for (const auto& [k, c] : *p) {
        if (!gh || a.degree[k] != *gh) {
          raise(ErrorKind::NotHomogeneous, a.algebra.basis[i] + "*" + a.algebra.basis[j] + " has a term " +
                                               a.algebra.basis[k] + " outside degree " +
                                               a.degree_label(a.degree[i]) + a.degree_label(a.degree[j]));
        }
      }
    }
  }
  for (const auto& [k, c] : a.algebra.unit) {
    if (a.degree[k] != a.identity()) raise(ErrorKind::NotHomogeneous, "the unit is not in degree e");
  }
}

std::optional<UnityResolution> resolution_of_unity(const GradedAlgebra& a, int g) {
  if (a.z_graded() && std::abs(g) > a.radius) return std::nullopt;
  if (g == a.identity()) return UnityResolution{g, {{a.algebra.unit, a.algebra.unit}}};
  const auto xs = a.component(a.inverse(g));
  const auto ys = a.component(g);
  const auto combo = product_span(a.algebra, xs, ys).solve(a.algebra.unit);
  if (!combo) return std::nullopt;
  UnityResolution r{g, {}};
  for (const auto& [tag, c] : *combo) {
    r.pairs.emplace_back(SparseVec{{xs[tag / ys.size()], c}}, e(ys[tag % ys.size()]));
  }
  return r;
}

StrongGradingVerdict strong_grading(const GradedAlgebra& a) {
  check_homogeneous(a);
  StrongGradingVerdict v;
  const std::vector<int> degrees = a.z_graded() ? std::vector<int>{1, -1} : a.degrees();
  for (int g : degrees) {
    auto r = resolution_of_unity(a, g);
    if (!r) {
      v.failing_degree = g;
      return v;
    }
    v.resolutions.push_back(std::move(*r));
  }
  v.strong = true;
  return v;
}

CanonicalMap canonical_map(const GradedAlgebra& a) {
  if (a.z_graded()) raise(ErrorKind::SchemaError, "the canonical map needs a finite grading group");
  check_homogeneous(a);
  const auto d = static_cast<std::uint32_t>(a.algebra.dim());
  const auto n = static_cast<std::uint32_t>(a.group->order());
  const auto base = a.component(a.identity());
  CanonicalMap m;
  m.dim_tensor = static_cast<std::size_t>(d) * d;
  m.dim_target = static_cast<std::size_t>(d) * n;
  m.matrix.resize(m.dim_tensor);
  RowEchelon image;
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      SparseVec col;
      for (const auto& [k, c] : a.algebra.product(i, j)) {
        col.emplace_back(k * n + static_cast<std::uint32_t>(a.degree[j]), c);
      }
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      image.insert(col, flat2(i, j, d));
      m.matrix[flat2(i, j, d)] = std::move(col);
    }
  }
  auto psi = [&](const SparseVec& t) {
    SparseVec out;
    for (const auto& [p, c] : t) out = axpy(out, c, m.matrix[p]);
    return out;
  };
  RowEchelon balance;
  std::uint32_t tag = 0;
  m.well_defined = true;
  for (std::uint32_t x = 0; x < d; ++x) {
    for (std::uint32_t y = 0; y < d; ++y) {
      for (auto b : base) {
        const SparseVec rel =
            axpy(tensor(a.algebra.product(x, b), e(y), d), Scalar(-1), tensor(e(x), a.algebra.product(b, y), d));
        if (!psi(rel).empty()) m.well_defined = false;
        balance.insert(rel, tag++);
      }
    }
  }
  m.dim_balanced = m.dim_tensor - balance.rank();
  m.rank = image.rank();
  m.bijective = m.well_defined && m.rank == m.dim_balanced && m.rank == m.dim_target;
  m.agrees_with_strong_grading = m.bijective == strong_grading(a).strong;
  return m;
}

GradedAlgebra crossed_product(const AlgebraPresentation& b, const FiniteGroup& g, const std::vector<LinearMap>& alpha) {
  const auto d = static_cast<std::uint32_t>(b.dim());
  const auto n = static_cast<std::uint32_t>(g.order());
  if (alpha.size() != n) raise(ErrorKind::NotAction, "one automorphism per group element is required");
  for (std::uint32_t x = 0; x < n; ++x) check_automorphism(b, alpha[x], "alpha_" + g.label(x));
  if (alpha[g.identity()] != identity_map(d)) raise(ErrorKind::NotAction, "alpha_e is not the identity");
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (matmul(alpha[x], alpha[y]) != alpha[g.mul(x, y)]) {
        raise(ErrorKind::NotAction, "alpha_" + g.label(x) + " alpha_" + g.label(y) + " != alpha_" +
                                        g.label(g.mul(x, y)));
      }
    }
  }
  GradedAlgebra out;
  out.group = g;
  AlgebraPresentation& a = out.algebra;
  a.name = b.name + "⋊" + g.name();
  const std::uint32_t dim = d * n;
  a.mult.resize(static_cast<std::size_t>(dim) * dim);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t x = 0; x < n; ++x) {
      a.basis.push_back(b.basis[i] + "⊗" + g.label(x));
      out.degree.push_back(static_cast<int>(x));
    }
  }
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t j = 0; j < d; ++j) {
        const SparseVec prod = b.multiply(e(i), apply_map(alpha[x], e(j)));
        for (std::uint32_t y = 0; y < n; ++y) {
          SparseVec v;
          for (const auto& [k, c] : prod) v.emplace_back(k * n + g.mul(x, y), c);
          a.mult[static_cast<std::size_t>(i * n + x) * dim + j * n + y] = std::move(v);
        }
      }
    }
  }
  for (const auto& [k, c] : b.unit) a.unit.emplace_back(k * n + g.identity(), c);
  return out;
}

GradedAlgebra z_crossed_product(const AlgebraPresentation& b, const LinearMap& alpha, int radius) {
  check_automorphism(b, alpha, "alpha");
  const auto inv = inverse(alpha);
  if (!inv) raise(ErrorKind::NotAutomorphism, "alpha is not invertible");
  const auto d = static_cast<std::uint32_t>(b.dim());
  const auto w = static_cast<std::uint32_t>(2 * radius + 1);
  std::vector<LinearMap> power(w);
  power[radius] = identity_map(d);
  for (int m = 1; m <= radius; ++m) {
    power[radius + m] = matmul(alpha, power[radius + m - 1]);
    power[radius - m] = matmul(*inv, power[radius - m + 1]);
  }
  GradedAlgebra out;
  out.radius = radius;
  AlgebraPresentation& a = out.algebra;
  a.name = b.name + "⋊Z";
  const std::uint32_t dim = d * w;
  a.mult.resize(static_cast<std::size_t>(dim) * dim);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (int m = -radius; m <= radius; ++m) {
      a.basis.push_back(b.basis[i] + (m == 0 ? "" : "t^" + std::to_string(m)));
      out.degree.push_back(m);
    }
  }
  for (std::uint32_t i = 0; i < d; ++i) {
    for (int m = -radius; m <= radius; ++m) {
      for (std::uint32_t j = 0; j < d; ++j) {
        const SparseVec prod = b.multiply(e(i), apply_map(power[radius + m], e(j)));
        for (int k = -radius; k <= radius; ++k) {
          if (std::abs(m + k) > radius) continue;
          SparseVec v;
          for (const auto& [l, c] : prod) v.emplace_back(l * w + static_cast<std::uint32_t>(m + k + radius), c);
          a.mult[static_cast<std::size_t>(i * w + m + radius) * dim + j * w + k + radius] = std::move(v);
        }
      }
    }
  }
  for (const auto& [k, c] : b.unit) a.unit.emplace_back(k * w + radius, c);
  return out;
}

Report smeb_check(const GradedAlgebra& a, int g) {
  Report r;
  r.name = "smeb(" + a.algebra.name + "," + a.degree_label(g) + ")";
  if (a.z_graded() && std::abs(g) > a.radius) {
    r.add_error("degree", "degree " + std::to_string(g) + " is outside the window");
    return r;
  }
  const AlgebraPresentation& alg = a.algebra;
  const auto xs = a.component(a.inverse(g));
  const auto ys = a.component(g);
  const auto base = a.component(a.identity());
  const auto nx = static_cast<std::uint32_t>(xs.size());
  const auto ny = static_cast<std::uint32_t>(ys.size());
  std::map<std::uint32_t, std::uint32_t> pos_x;
  std::map<std::uint32_t, std::uint32_t> pos_y;
  for (std::uint32_t i = 0; i < nx; ++i) pos_x[xs[i]] = i;
  for (std::uint32_t i = 0; i < ny; ++i) pos_y[ys[i]] = i;
  // x ⊗ y for x ∈ A_{g⁻¹}, y ∈ A_g in local coordinates
  auto local = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec out;
    for (const auto& [i, c] : x) {
      for (const auto& [j, c2] : y) out.emplace_back(pos_x.at(i) * ny + pos_y.at(j), c * c2);
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    SparseVec merged;
    for (const auto& t : out) merged = axpy(merged, t.second, SparseVec{{t.first, Scalar(1)}});
    return merged;
  };
  auto phi = [&](const SparseVec& t) {
    SparseVec out;
    for (const auto& [p, c] : t) out = axpy(out, c, alg.product(xs[p / ny], ys[p % ny]));
    return out;
  };
  auto pair_label = [&](std::uint32_t x, std::uint32_t y) { return alg.basis[x] + "⊗" + alg.basis[y]; };

  RowEchelon balance;
  Tally well_defined;
  std::uint32_t tag = 0;
  for (auto x : xs) {
    for (auto y : ys) {
      for (auto b : base) {
        const SparseVec rel = axpy(local(alg.product(x, b), e(y)), Scalar(-1), local(e(x), alg.product(b, y)));
        well_defined.record(phi(rel).size(), pair_label(x, y) + " with " + alg.basis[b]);
        balance.insert(rel, tag++);
      }
    }
  }
  well_defined.into(r, "balanced-well-defined");
  const std::size_t dim_balanced = static_cast<std::size_t>(nx) * ny - balance.rank();

  RowEchelon image;
  tag = 0;
  for (auto x : xs) {
    for (auto y : ys) image.insert(alg.product(x, y), tag++);
  }
  std::string missing;
  for (auto b : base) {
    if (!image.contains(e(b))) {
      missing = alg.basis[b] + " not in the image";
      break;
    }
  }
  r.add("multiplication-surjective", base.size() - std::min(base.size(), image.rank()), missing, base.size());
  r.add("multiplication-injective", dim_balanced - std::min(dim_balanced, image.rank()),
        "dim " + std::to_string(dim_balanced) + " rank " + std::to_string(image.rank()), dim_balanced);

  const auto frame = resolution_of_unity(a, g);
  if (!frame) {
    r.add("inverse-exists", 1, "no resolution of unity in degree " + a.degree_label(g));
  } else {
    auto phi_inv = [&](const SparseVec& b) {
      SparseVec out;
      for (const auto& [xi, eta] : frame->pairs) {
        const SparseVec t = local(alg.multiply(b, xi), eta);
        out = axpy(out, Scalar(1), t);
      }
      return out;
    };
    Tally right;
    for (auto b : base) right.record(diff_terms(phi(phi_inv(e(b))), e(b)), alg.basis[b]);
    right.into(r, "inverse-right");
    Tally left;
    for (auto x : xs) {
      for (auto y : ys) {
        const SparseVec t = axpy(phi_inv(alg.product(x, y)), Scalar(-1), local(e(x), e(y)));
        left.record(balance.reduce(t).size(), pair_label(x, y));
      }
    }
    left.into(r, "inverse-left");
  }

  Tally first;
  for (auto p : ys) {
    for (auto q : xs) {
      for (auto s : ys) {
        const SparseVec lhs = alg.multiply(alg.product(p, q), e(s));
        const SparseVec rhs = alg.multiply(e(p), alg.product(q, s));
        first.record(diff_terms(lhs, rhs), alg.basis[p] + "," + alg.basis[q] + "," + alg.basis[s]);
      }
    }
  }
  first.into(r, "phi(a,b)c=a.psi(b,c)");
  Tally second;
  for (auto p : xs) {
    for (auto q : ys) {
      for (auto s : xs) {
        const SparseVec lhs = alg.multiply(e(p), alg.product(q, s));
        const SparseVec rhs = alg.multiply(alg.product(p, q), e(s));
        second.record(diff_terms(lhs, rhs), alg.basis[p] + "," + alg.basis[q] + "," + alg.basis[s]);
      }
    }
  }
  second.into(r, "b.phi(c,d)=psi(b,c)d");
  return r;
}

std::size_t ideal_residual(const GradedAlgebra& a, int g, std::string* witness) {
  const AlgebraPresentation& alg = a.algebra;
  const auto xs = a.component(g);
  const auto ys = a.component(a.inverse(g));
  const RowEchelon span = product_span(alg, xs, ys);
  std::size_t residual = 0;
  for (auto x : xs) {
    for (auto y : ys) {
      const auto& p = entry(alg, x, y);
      if (!p) continue;
      for (auto b : a.component(a.identity())) {
        for (const SparseVec& v : {alg.multiply(e(b), *p), alg.multiply(*p, e(b))}) {
          const std::size_t terms = span.reduce(v).size();
          if (terms != 0 && residual == 0 && witness) {
            *witness = alg.basis[b] + " with " + alg.basis[x] + alg.basis[y];
          }
          residual += terms;
        }
      }
    }
  }
  return residual;
}

Report window_products(const GradedAlgebra& a) {
  Report r;
  r.name = "window-products(" + a.algebra.name + ")";
  Tally t;
  for (int h = -a.radius; h <= a.radius; ++h) {
    for (int k = -a.radius; k <= a.radius; ++k) {
      const auto hk = a.combine(h, k);
      if (!hk) continue;
      const std::size_t target = a.component(*hk).size();
      const std::size_t got = product_span(a.algebra, a.component(h), a.component(k)).rank();
      t.record(target - std::min(target, got), "A_" + std::to_string(h) + "A_" + std::to_string(k));
    }
  }
  t.into(r, "A_hA_k=A_{h+k}");
  return r;
}

std::vector<NamedGraded> graded_battery(int radius) {
  std::vector<NamedGraded> out;
  const FiniteGroup z2 = cyclic_group(2);
  out.push_back({group_graded(z2), true});
  out.push_back({group_graded(cyclic_group(3)), true});
  out.push_back({group_graded(symmetric_group_s3()), true});

  const LinearMap transpose_conj = permutation_map({3, 2, 1, 0});  // E_ij ↦ E_{σi σj}
  out.push_back({crossed_product(matrix_algebra(), z2, {identity_map(4), transpose_conj}), true});
  const LinearMap swap = permutation_map({1, 0});
  out.push_back({crossed_product(split_pair(), z2, {identity_map(2), swap}), true});

  AlgebraPresentation checker = matrix_algebra();
  checker.name = "M2(k)-checkerboard";
  out.push_back({finite_graded(checker, z2, {0, 1, 1, 0}), true});

  AlgebraPresentation dual_numbers;
  dual_numbers.name = "k[x]/(x^2)";
  dual_numbers.basis = {"1", "x"};
  dual_numbers.mult = {e(0), e(1), e(1), SparseVec{}};
  dual_numbers.unit = e(0);
  out.push_back({finite_graded(dual_numbers, z2, {0, 1}), false});

  AlgebraPresentation triangular;
  triangular.name = "T2(k)";
  triangular.basis = {"E11", "E12", "E22"};
  triangular.mult = {e(0), e(1), SparseVec{}, SparseVec{}, SparseVec{}, e(1), SparseVec{}, SparseVec{}, e(2)};
  triangular.unit = {{0, Scalar(1)}, {2, Scalar(1)}};
  out.push_back({finite_graded(triangular, z2, {0, 1, 0}), false});

  out.push_back({finite_graded(split_pair(), z2, {0, 0}), false});

  GradedAlgebra laurent = z_crossed_product(ground_field(), identity_map(1), radius);
  laurent.algebra.name = "k[t,t^-1]";
  out.push_back({laurent, true});
  out.push_back({z_crossed_product(split_pair(), swap, radius), true});

  // k[t,s]/(ts, st) with t in degree 1 and s in degree -1
  GradedAlgebra cross;
  cross.radius = radius;
  AlgebraPresentation& c = cross.algebra;
  c.name = "k[t,s]/(ts,st)";
  c.basis.push_back("1");
  cross.degree.push_back(0);
  for (int m = 1; m <= radius; ++m) {
    c.basis.push_back("t^" + std::to_string(m));
    cross.degree.push_back(m);
    c.basis.push_back("s^" + std::to_string(m));
    cross.degree.push_back(-m);
  }
  const auto dim = static_cast<std::uint32_t>(c.basis.size());
  c.mult.resize(static_cast<std::size_t>(dim) * dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = 0; j < dim; ++j) {
      const int p = cross.degree[i];
      const int q = cross.degree[j];
      if (std::abs(p + q) > radius) continue;
      if (p == 0 || q == 0 || (p > 0) == (q > 0)) {
        const int s = p + q;
        c.mult[i * dim + j] = e(s == 0 ? 0 : static_cast<std::uint32_t>(s > 0 ? 2 * s - 1 : -2 * s));
      } else {
        c.mult[i * dim + j] = SparseVec{};
      }
    }
  }
  c.unit = e(0);
  out.push_back({cross, false});
  return out;
}

Report graded_galois_suite() {
  Report r;
  r.name = "graded-galois";
  std::size_t positives = 0;
  std::size_t negatives = 0;
  for (const auto& [a, expected] : graded_battery()) {
    const std::string p = a.algebra.name + ":";
    try {
      check_homogeneous(a);
      r.add(p + "homogeneous", 0);
    } catch (const Error& err) {
      r.add_error(p + "homogeneous", err.what());
      continue;
    }
    r.append(verify_algebra(a.algebra), p);
    const std::vector<int> degrees = a.z_graded() ? std::vector<int>{1, -1} : a.degrees();

    // the definition: A_g A_h = A_{gh}
    bool by_definition = true;
    if (a.z_graded()) {
      by_definition = window_products(a).passed();
    } else {
      for (int g : a.degrees()) {
        for (int h : a.degrees()) {
          const std::size_t got = product_span(a.algebra, a.component(g), a.component(h)).rank();
          if (got != a.component(*a.combine(g, h)).size()) by_definition = false;
        }
      }
    }
    const bool resolutions = strong_grading(a).strong;
    bool smeb = true;
    for (int g : degrees) smeb = smeb && smeb_check(a, g).passed();
    std::string verdicts = "definition=" + std::to_string(by_definition) +
                           " resolutions=" + std::to_string(resolutions) + " smeb=" + std::to_string(smeb);
    std::size_t disagreements = (by_definition != resolutions) + (resolutions != smeb);
    if (!a.z_graded()) {
      const CanonicalMap m = canonical_map(a);
      verdicts += " canonical=" + std::to_string(m.bijective);
      disagreements += (m.bijective != resolutions) + !m.well_defined;
      r.add(p + "canonical-map-well-defined", !m.well_defined);
    }
    r.add(p + "equivalence", disagreements, disagreements ? verdicts : "");
    r.add(p + "expected-strong=" + std::to_string(expected), resolutions != expected, resolutions != expected ? verdicts : "");
    (expected ? positives : negatives) += 1;

    std::size_t ideal = 0;
    std::string witness;
    for (int g : a.degrees()) ideal += ideal_residual(a, g, witness.empty() ? &witness : nullptr);
    r.add(p + "ideal-property", ideal, witness, a.degrees().size());
    if (a.z_graded() && resolutions) r.append(window_products(a), p);
  }
  r.add("battery-size", positives + negatives >= 6 && negatives >= 2 ? 0 : 1,
        std::to_string(positives) + " strong, " + std::to_string(negatives) + " not strong");

  // worked examples
  const auto battery = graded_battery(2);
  const GradedAlgebra& kz2 = battery[0].algebra;
  const GradedAlgebra& kz3 = battery[1].algebra;
  const auto unit_frame = resolution_of_unity(kz3, kz3.identity());
  r.add("resolution-degree-e=(1,1)",
        !(unit_frame && unit_frame->pairs.size() == 1 && unit_frame->pairs[0].first == kz3.algebra.unit &&
          unit_frame->pairs[0].second == kz3.algebra.unit));
  const auto frame = resolution_of_unity(kz3, 1);
  r.add("kZ3-resolution-degree-1=(g^2,g)",
        !(frame && frame->pairs.size() == 1 && frame->pairs[0].first == e(2) && frame->pairs[0].second == e(1)));
  const CanonicalMap m2 = canonical_map(kz2);
  r.add("kZ2-canonical-dims", !(m2.dim_balanced == 4 && m2.dim_target == 4 && m2.rank == 4 && m2.bijective),
        "dim " + std::to_string(m2.dim_balanced) + " rank " + std::to_string(m2.rank));
  const CanonicalMap md = canonical_map(battery[6].algebra);
  r.add_expect_nonzero("k[x]/(x^2)-canonical-rank-deficit", md.dim_target - md.rank,
                       "rank " + std::to_string(md.rank) + " of " + std::to_string(md.dim_target));
  r.add_expect_nonzero("k[x]/(x^2)-no-resolution-degree-1", !resolution_of_unity(battery[6].algebra, 1));

  const GradedAlgebra& pair = battery[4].algebra;
  std::size_t noncommuting = 0;
  for (std::uint32_t i = 0; i < pair.algebra.dim(); ++i) {
    for (std::uint32_t j = 0; j < pair.algebra.dim(); ++j) {
      noncommuting += pair.algebra.product(i, j) != pair.algebra.product(j, i);
    }
  }
  r.add("(kxk)xZ2-dim-4", pair.algebra.dim() != 4);
  r.add_expect_nonzero("(kxk)xZ2-noncommutative", noncommuting);

  // trivial action gives B ⊗ kG
  const FiniteGroup z3 = cyclic_group(3);
  const GradedAlgebra trivial = crossed_product(split_pair(), z3, {identity_map(2), identity_map(2), identity_map(2)});
  const AlgebraPresentation split = split_pair();
  Tally tensor_product;
  for (std::uint32_t i = 0; i < 2; ++i) {
    for (std::uint32_t x = 0; x < 3; ++x) {
      for (std::uint32_t j = 0; j < 2; ++j) {
        for (std::uint32_t y = 0; y < 3; ++y) {
          SparseVec expect;
          for (const auto& [k, c] : split.product(i, j)) expect.emplace_back(k * 3 + z3.mul(x, y), c);
          tensor_product.record(diff_terms(trivial.algebra.product(i * 3 + x, j * 3 + y), expect),
                                trivial.algebra.basis[i * 3 + x] + "," + trivial.algebra.basis[j * 3 + y]);
        }
      }
    }
  }
  tensor_product.into(r, "trivial-action=B⊗kG");
  r.add("trivial-action-strong", !strong_grading(trivial).strong);

  // unital and bijective, but e1 ↦ 2e1 - e2 is not idempotent
  const LinearMap not_mult = {{Scalar(2), Scalar(-1)}, {Scalar(-1), Scalar(2)}};
  try {
    (void)crossed_product(split_pair(), cyclic_group(2), {identity_map(2), not_mult});
    r.add("not-multiplicative-rejected", 1, "accepted");
  } catch (const Error& err) {
    r.add("not-multiplicative-rejected", err.kind() != ErrorKind::NotAutomorphism, err.what());
  }
  try {
    (void)crossed_product(split_pair(), z3, {identity_map(2), permutation_map({1, 0}), permutation_map({1, 0})});
    r.add("non-action-rejected", 1, "accepted");
  } catch (const Error& err) {
    r.add("non-action-rejected", err.kind() != ErrorKind::NotAction, err.what());
  }
  return r;
}

WeightVector sharp(const WeightVector& l) {
  if (l.empty()) raise(ErrorKind::SchemaError, "empty weight vector");
  for (auto x : l) {
    if (x < 1) raise(ErrorKind::SchemaError, "weights must be positive");
  }
  WeightVector out(l.size(), 1);
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (j != i) out[i] *= l[j];
    }
  }
  return out;
}

bool is_coprime(const WeightVector& l) {
  std::int64_t g = 0;
  for (auto x : l) g = std::gcd(g, x);
  return g == 1;
}

bool is_pairwise_coprime(const WeightVector& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (std::gcd(l[i], l[j]) != 1) return false;
    }
  }
  return true;
}

namespace {

std::string show(const WeightVector& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Report sharp_laws(const WeightVector& l) {
  Report r;
  r.name = "sharp" + show(l);
  const WeightVector s2 = sharp(sharp(l));
  std::int64_t prod = 1;
  for (auto x : l) prod *= x;
  const std::size_t n = l.size() - 1;
  // k = prod^{n-1}; for n = 0 compare prod·ℓ^♯♯ = ℓ
  std::size_t bad = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (n == 0 ? s2[i] * prod != l[i] : s2[i] != ipow(prod, n - 1) * l[i]) ++bad;
  }
  r.add("sharp-sharp=k*l", bad, bad ? show(s2) : "");
  r.add("coprime<=>pairwise-coprime", is_coprime(sharp(l)) != is_pairwise_coprime(l));
  return r;
}

Report sharp_map_suite() {
  Report r;
  r.name = "sharp-map";
  r.add("(3,5)#=(5,3)", sharp({3, 5}) != WeightVector{5, 3});
  r.add("(1,2,3)#=(6,3,2)", sharp({1, 2, 3}) != WeightVector{6, 3, 2});
  r.add("(1,2,3)##=6(1,2,3)", sharp(sharp({1, 2, 3})) != WeightVector{6, 12, 18});
  r.add("(2,4)-not-pairwise-coprime", is_pairwise_coprime({2, 4}));
  r.add("(2,4)#-not-coprime", is_coprime(sharp({2, 4})));
  Tally involution;
  Tally coprime;
  WeightVector l;
  std::function<void()> walk = [&] {
    if (!l.empty()) {
      const Report one = sharp_laws(l);
      involution.record(one.checks[0].residual_terms, show(l));
      coprime.record(one.checks[1].residual_terms, show(l));
    }
    if (l.size() == 4) return;
    for (std::int64_t x = 1; x <= 4; ++x) {
      l.push_back(x);
      walk();
      l.pop_back();
    }
  };
  walk();
  involution.into(r, "sharp-sharp=k*l-exhaustive");
  coprime.into(r, "coprime<=>pairwise-coprime-exhaustive");
  return r;
}

}  // namespace hopfq
