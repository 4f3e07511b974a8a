#include "hopfq/constructors.hpp"

#include <algorithm>

#include "hopfq/error.hpp"
#include "hopfq/hopf_verify.hpp"

namespace hopfq {

namespace {

SparseVec unit_vec(std::uint32_t i, Scalar c = Scalar(1)) { return SparseVec{{i, std::move(c)}}; }

SparseVec merge(std::vector<std::pair<std::uint32_t, Scalar>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!t.second.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Matrix antipode_matrix(std::size_t d, const std::vector<SparseVec>& images) {
  Matrix s(d, std::vector<Scalar>(d));
  for (std::size_t c = 0; c < d; ++c) {
    for (const auto& [r, v] : images[c]) s[r][c] = v;
  }
  return s;
}

}  // namespace

HopfPresentation group_algebra(const FiniteGroup& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  HopfPresentation h;
  h.algebra.name = "k" + g.name();
  h.algebra.basis = g.labels();
  h.algebra.mult.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) h.algebra.mult[a * n + b] = unit_vec(g.mul(a, b));
  }
  h.algebra.unit = unit_vec(g.identity());
  h.coalgebra.basis = g.labels();
  std::vector<SparseVec> s(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    h.coalgebra.coproduct.push_back(unit_vec(flat2(a, a, n)));
    h.coalgebra.counit.push_back(Scalar(1));
    s[a] = unit_vec(g.inverse(a));
  }
  h.antipode = antipode_matrix(n, s);
  h.commutative = g.abelian();
  h.cocommutative = true;
  return h;
}

HopfPresentation dual_group_hopf(const FiniteGroup& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  HopfPresentation h;
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("δ_" + l);
  h.algebra.name = "k^" + g.name();
  h.algebra.basis = labels;
  h.algebra.mult.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) h.algebra.mult[a * n + b] = a == b ? unit_vec(a) : SparseVec{};
    h.algebra.unit.emplace_back(a, Scalar(1));
  }
  h.coalgebra.basis = labels;
  std::vector<SparseVec> s(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    std::vector<std::pair<std::uint32_t, Scalar>> terms;
    for (std::uint32_t a = 0; a < n; ++a) terms.emplace_back(flat2(a, g.mul(g.inverse(a), c), n), Scalar(1));
    h.coalgebra.coproduct.push_back(merge(std::move(terms)));
    h.coalgebra.counit.push_back(Scalar(c == g.identity() ? 1 : 0));
    s[c] = unit_vec(g.inverse(c));
  }
  h.antipode = antipode_matrix(n, s);
  h.commutative = true;
  h.cocommutative = g.abelian();
  return h;
}

HopfPresentation taft(int p, const Cyclotomic& lambda) {
  if (p < 2) raise(ErrorKind::NotPrimitiveRoot, "Taft algebra needs p >= 2");
  if (!lambda.pow(p).is_one()) raise(ErrorKind::NotPrimitiveRoot, "lambda^p != 1");
  for (int j = 1; j < p; ++j) {
    if (lambda.pow(j).is_one()) raise(ErrorKind::NotPrimitiveRoot, "lambda is not a primitive p-th root of unity");
  }
  const auto q = static_cast<std::uint32_t>(p);
  const std::uint32_t d = q * q;
  auto idx = [q](std::uint32_t a, std::uint32_t b) { return (a % q) * q + b; };
  HopfPresentation h;
  h.algebra.name = "Taft" + std::to_string(p);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      std::string l;
      if (a > 0) l += a == 1 ? "g" : "g^" + std::to_string(a);
      if (b > 0) l += b == 1 ? "x" : "x^" + std::to_string(b);
      h.algebra.basis.push_back(l.empty() ? "1" : l);
    }
  }
  // (g^a x^b)(g^c x^e) = λ^{-bc} g^{a+c} x^{b+e}
  h.algebra.mult.resize(static_cast<std::size_t>(d) * d);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::uint32_t a = i / q;
      const std::uint32_t b = i % q;
      const std::uint32_t c = j / q;
      const std::uint32_t e = j % q;
      if (b + e >= q) {
        h.algebra.mult[i * d + j] = SparseVec{};
      } else {
        h.algebra.mult[i * d + j] =
            unit_vec(idx(a + c, b + e), Scalar(lambda.pow(-static_cast<long long>(b * c))));
      }
    }
  }
  h.algebra.unit = unit_vec(0);
  h.coalgebra.basis = h.algebra.basis;
  const SparseVec dg = unit_vec(flat2(idx(1, 0), idx(1, 0), d));
  const SparseVec dx = merge({{flat2(idx(0, 1), idx(1, 0), d), Scalar(1)}, {flat2(idx(0, 0), idx(0, 1), d), Scalar(1)}});
  const SparseVec g_inv = unit_vec(idx(q - 1, 0));
  const SparseVec s_x = scale(h.algebra.multiply(unit_vec(idx(0, 1)), g_inv), Scalar(-1));
  std::vector<SparseVec> s(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    const std::uint32_t a = i / q;
    const std::uint32_t b = i % q;
    SparseVec delta = unit_vec(flat2(0, 0, d));
    SparseVec anti = unit_vec(0);
    for (std::uint32_t k = 0; k < a; ++k) {
      delta = multiply_legs(h.algebra, delta, dg, 2);
      anti = h.algebra.multiply(g_inv, anti);
    }
    for (std::uint32_t k = 0; k < b; ++k) {
      delta = multiply_legs(h.algebra, delta, dx, 2);
      anti = h.algebra.multiply(s_x, anti);
    }
    h.coalgebra.coproduct.push_back(delta);
    h.coalgebra.counit.push_back(Scalar(b == 0 ? 1 : 0));
    s[i] = anti;
  }
  h.antipode = antipode_matrix(d, s);
  return h;
}

ShuffleBialgebra::ShuffleBialgebra(int dim_v, int max_len) : dim_v_(dim_v), max_len_(max_len) {
  if (dim_v < 1 || max_len < 0) raise(ErrorKind::LengthOverflow, "bad shuffle bialgebra parameters");
  std::vector<Word> layer = {Word{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      index_[w] = static_cast<std::uint32_t>(words_.size());
      words_.push_back(w);
      for (int v = 1; v <= dim_v; ++v) {
        Word x = w;
        x.push_back(v);
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  const auto d = static_cast<std::uint32_t>(words_.size());
  auto& a = hopf_.algebra;
  a.name = "Sh(" + std::to_string(dim_v) + "," + std::to_string(max_len) + ")";
  for (const Word& w : words_) {
    std::string l;
    for (int v : w) l += "v" + std::to_string(v);
    a.basis.push_back(l.empty() ? "1" : l);
  }
  a.mult.resize(static_cast<std::size_t>(d) * d);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      if (words_[i].size() + words_[j].size() <= static_cast<std::size_t>(max_len)) {
        a.mult[i * d + j] = shuffle_product(words_[i], words_[j]);
      }
    }
  }
  a.unit = unit_vec(0);
  hopf_.coalgebra.basis = a.basis;
  std::vector<SparseVec> s(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    hopf_.coalgebra.coproduct.push_back(deconcatenate(words_[i]));
    hopf_.coalgebra.counit.push_back(Scalar(words_[i].empty() ? 1 : 0));
    Word r(words_[i].rbegin(), words_[i].rend());
    s[i] = unit_vec(index(r), Scalar(words_[i].size() % 2 ? -1 : 1));
  }
  hopf_.antipode = antipode_matrix(d, s);
  hopf_.commutative = true;
}

std::uint32_t ShuffleBialgebra::index(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) raise(ErrorKind::LengthOverflow, "word longer than " + std::to_string(max_len_));
  return it->second;
}

SparseVec ShuffleBialgebra::shuffle_product(const Word& w1, const Word& w2) const {
  const std::size_t n = w1.size() + w2.size();
  if (n > static_cast<std::size_t>(max_len_)) {
    raise(ErrorKind::LengthOverflow, "shuffle product of length " + std::to_string(n));
  }
  // positions taken by w1: each increasing k-subset of 0..n-1
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(w1.size()), true);
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  do {
    Word w(n);
    std::size_t i = 0;
    std::size_t j = 0;
    for (std::size_t p = 0; p < n; ++p) w[p] = mask[p] ? w1[i++] : w2[j++];
    terms.emplace_back(index(w), Scalar(1));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return merge(std::move(terms));
}

SparseVec ShuffleBialgebra::deconcatenate(const Word& w) const {
  const auto d = static_cast<std::uint32_t>(words_.size());
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (std::size_t k = 0; k <= w.size(); ++k) {
    const Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    const Word right(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    terms.emplace_back(flat2(index(left), index(right), d), Scalar(1));
  }
  return merge(std::move(terms));
}

std::uint32_t pareigis_g(int n_window, int n) {
  if (n < -n_window || n > n_window) raise(ErrorKind::WindowOverflow, "g^" + std::to_string(n) + " outside window");
  return static_cast<std::uint32_t>(n + n_window);
}

std::uint32_t pareigis_gx(int n_window, int n) {
  if (n < -n_window || n > n_window) {
    raise(ErrorKind::WindowOverflow, "g^" + std::to_string(n) + "x outside window");
  }
  return static_cast<std::uint32_t>(2 * n_window + 1 + n + n_window);
}

HopfPresentation pareigis_window(int n_window) {
  if (n_window < 1) raise(ErrorKind::WindowOverflow, "Pareigis window needs N >= 1");
  const int big_n = n_window;
  const auto half = static_cast<std::uint32_t>(2 * big_n + 1);
  const std::uint32_t d = 2 * half;
  auto in = [big_n](int n) { return n >= -big_n && n <= big_n; };
  auto power = [](int n) { return n == 0 ? std::string() : (n == 1 ? std::string("g") : "g^" + std::to_string(n)); };
  HopfPresentation h;
  auto& a = h.algebra;
  a.name = "Pareigis(" + std::to_string(big_n) + ")";
  for (int n = -big_n; n <= big_n; ++n) a.basis.push_back(n == 0 ? "1" : power(n));
  for (int n = -big_n; n <= big_n; ++n) a.basis.push_back(power(n) + "x");
  auto deg = [&](std::uint32_t i) { return static_cast<int>(i % half) - big_n; };
  auto has_x = [&](std::uint32_t i) { return i >= half; };
  a.mult.resize(static_cast<std::size_t>(d) * d);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      auto& slot = a.mult[i * d + j];
      if (has_x(i) && has_x(j)) {
        slot = SparseVec{};
        continue;
      }
      const int n = deg(i) + deg(j);
      if (!in(n)) continue;
      if (!has_x(i) && !has_x(j)) {
        slot = unit_vec(pareigis_g(big_n, n));
      } else if (!has_x(i)) {
        slot = unit_vec(pareigis_gx(big_n, n));
      } else {
        // g^a x g^b = (-1)^b g^{a+b} x
        slot = unit_vec(pareigis_gx(big_n, n), Scalar(deg(j) % 2 ? -1 : 1));
      }
    }
  }
  a.unit = unit_vec(pareigis_g(big_n, 0));
  h.coalgebra.basis = a.basis;
  Matrix s(d, std::vector<Scalar>(d));
  h.antipode_window.assign(d, true);
  for (std::uint32_t i = 0; i < d; ++i) {
    const int n = deg(i);
    if (!has_x(i)) {
      h.coalgebra.coproduct.push_back(unit_vec(flat2(i, i, d)));
      h.coalgebra.counit.push_back(Scalar(1));
      s[pareigis_g(big_n, -n)][i] = Scalar(1);
      continue;
    }
    // Δ(g^n x) = g^n x ⊗ g^{n+1} + g^n ⊗ g^n x
    if (in(n + 1)) {
      h.coalgebra.coproduct.push_back(
          merge({{flat2(i, pareigis_g(big_n, n + 1), d), Scalar(1)}, {flat2(pareigis_g(big_n, n), i, d), Scalar(1)}}));
    } else {
      h.coalgebra.coproduct.emplace_back(std::nullopt);
    }
    h.coalgebra.counit.push_back(Scalar(0));
    // S(g^n x) = (-1)^n g^{-n-1} x
    if (in(-n - 1)) {
      s[pareigis_gx(big_n, -n - 1)][i] = Scalar(n % 2 ? -1 : 1);
    } else {
      h.antipode_window[i] = false;
    }
  }
  h.antipode = std::move(s);
  return h;
}

std::size_t ChainComplexWindow::total_dim() const {
  std::size_t t = 0;
  for (auto x : dims) t += x;
  return t;
}

std::size_t ChainComplexWindow::offset(int n) const {
  std::size_t t = 0;
  for (int m = -radius; m < n; ++m) t += dim(m);
  return t;
}

std::size_t ChainComplexWindow::dsquared_terms() const {
  std::size_t terms = 0;
  for (int n = -radius + 2; n <= radius; ++n) {
    const Matrix& d1 = differential(n - 1);
    const Matrix& d2 = differential(n);
    if (d1.empty() || d2.empty()) continue;
    for (const auto& row : matmul(d1, d2)) {
      for (const auto& v : row) terms += v.is_zero() ? 0 : 1;
    }
  }
  return terms;
}

Comodule chain_to_comodule(const ChainComplexWindow& c, int n_window, bool check) {
  if (check && c.dsquared_terms() != 0) raise(ErrorKind::NotAComplex, "d∘d != 0");
  if (c.radius + 1 > n_window) {
    raise(ErrorKind::WindowOverflow, "complex of radius " + std::to_string(c.radius) + " needs a wider window");
  }
  const auto dh = static_cast<std::uint32_t>(4 * n_window + 2);
  Comodule m;
  for (int n = -c.radius; n <= c.radius; ++n) {
    for (std::size_t i = 0; i < c.dim(n); ++i) {
      m.basis.push_back("a" + std::to_string(n) + "_" + std::to_string(i));
      std::vector<std::pair<std::uint32_t, Scalar>> terms;
      const auto self = static_cast<std::uint32_t>(c.offset(n) + i);
      terms.emplace_back(self * dh + pareigis_g(n_window, n), Scalar(1));
      if (n > -c.radius) {
        const Matrix& d = c.differential(n);
        for (std::size_t r = 0; r < d.size(); ++r) {
          if (d[r][i].is_zero()) continue;
          const auto target = static_cast<std::uint32_t>(c.offset(n - 1) + r);
          terms.emplace_back(target * dh + pareigis_gx(n_window, n - 1), d[r][i]);
        }
      }
      m.coaction.push_back(merge(std::move(terms)));
    }
  }
  return m;
}

ChainComplexWindow comodule_to_chain(const Comodule& m, int radius, int n_window) {
  const auto dh = static_cast<std::uint32_t>(4 * n_window + 2);
  const auto half = static_cast<std::uint32_t>(2 * n_window + 1);
  ChainComplexWindow c;
  c.radius = radius;
  c.dims.assign(static_cast<std::size_t>(2 * radius + 1), 0);
  std::vector<int> degree(m.basis.size());
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    int found = 0;
    for (const auto& [idx, v] : m.coaction[i]) {
      const std::uint32_t hk = idx % dh;
      if (idx / dh == i && hk < half) {
        if (!v.is_one()) raise(ErrorKind::SchemaError, "coaction is not normalized on " + m.basis[i]);
        degree[i] = static_cast<int>(hk) - n_window;
        ++found;
      }
    }
    if (found != 1) raise(ErrorKind::SchemaError, "no unique degree for " + m.basis[i]);
    if (degree[i] < -radius || degree[i] > radius) raise(ErrorKind::WindowOverflow, "degree outside radius");
    if (i > 0 && degree[i] < degree[i - 1]) raise(ErrorKind::SchemaError, "basis not ordered by degree");
    ++c.dims[static_cast<std::size_t>(degree[i] + radius)];
  }
  c.d.resize(c.dims.size());
  for (int n = -radius + 1; n <= radius; ++n) {
    c.d[static_cast<std::size_t>(n + radius)] = Matrix(c.dim(n - 1), std::vector<Scalar>(c.dim(n)));
  }
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    const int n = degree[i];
    for (const auto& [idx, v] : m.coaction[i]) {
      const std::uint32_t hk = idx % dh;
      if (hk < half) {
        if (idx / dh != i) raise(ErrorKind::SchemaError, "coaction mixes basis elements in the g-part");
        continue;
      }
      if (static_cast<int>(hk - half) - n_window != n - 1) raise(ErrorKind::SchemaError, "x-part in wrong degree");
      const std::uint32_t target = idx / dh;
      if (degree[target] != n - 1) raise(ErrorKind::SchemaError, "differential does not lower degree");
      c.d[static_cast<std::size_t>(n + radius)][target - c.offset(n - 1)][i - c.offset(n)] = v;
    }
  }
  return c;
}

Report verify_comodule(const Comodule& m, const HopfPresentation& h) {
  Report r;
  r.name = "comodule";
  const auto dm = static_cast<std::uint32_t>(m.basis.size());
  const auto dh = static_cast<std::uint32_t>(h.dim());
  Tally coassoc;
  Tally counit;
  for (std::uint32_t i = 0; i < dm; ++i) {
    const SparseVec& delta = m.coaction[i];
    // (δ ⊗ id)δ over flat (a, h1, h2)
    std::vector<std::pair<std::uint32_t, Scalar>> lhs;
    std::vector<std::pair<std::uint32_t, Scalar>> rhs;
    std::vector<std::pair<std::uint32_t, Scalar>> eps;
    for (const auto& [idx, v] : delta) {
      const std::uint32_t a = idx / dh;
      const std::uint32_t hk = idx % dh;
      for (const auto& [idx2, w] : m.coaction[a]) {
        lhs.emplace_back(idx2 * dh + hk, v * w);
      }
      for (const auto& [hh, w] : h.coalgebra.delta(hk)) rhs.emplace_back(a * dh * dh + hh, v * w);
      if (!h.coalgebra.counit[hk].is_zero()) eps.emplace_back(a, v * h.coalgebra.counit[hk]);
    }
    const std::size_t res = axpy(merge(lhs), Scalar(-1), merge(rhs)).size();
    coassoc.record(res, m.basis[i]);
    counit.record(axpy(merge(eps), Scalar(-1), unit_vec(i)).size(), m.basis[i]);
  }
  coassoc.into(r, "coaction-coassociative");
  counit.into(r, "coaction-counital");
  return r;
}

Report dual_pairing_check(const FiniteGroup& g) {
  const HopfPresentation kg = group_algebra(g);
  const HopfPresentation dual = dual_group_hopf(g);
  const auto n = static_cast<std::uint32_t>(g.order());
  // flat indices of k^G and kG (and of their squares) line up under the pairing
  auto pairing = [](const SparseVec& f, const SparseVec& x) {
    Scalar s;
    for (const auto& [i, a] : f) {
      for (const auto& [j, b] : x) {
        if (i == j) s += a * b;
      }
    }
    return s;
  };
  Report r;
  r.name = "dual-pairing";
  Tally mult_vs_delta;
  Tally delta_vs_mult;
  Tally unit_counit;
  Tally antipode;
  for (std::uint32_t f = 0; f < n; ++f) {
    const SparseVec fv = unit_vec(f);
    for (std::uint32_t a = 0; a < n; ++a) {
      const SparseVec av = unit_vec(a);
      const std::string w = dual.algebra.basis[f] + "," + kg.algebra.basis[a];
      for (std::uint32_t b = 0; b < n; ++b) {
        const SparseVec bv = unit_vec(b);
        // <f, ab> = <Δf, a⊗b>
        const Scalar lhs = pairing(fv, kg.algebra.multiply(av, bv));
        const Scalar rhs = pairing(dual.coalgebra.apply_delta(fv), tensor(av, bv, n));
        mult_vs_delta.record(lhs == rhs ? 0 : 1, w + "," + kg.algebra.basis[b]);
        // <f·f', a> = <f⊗f', Δa>
        const SparseVec f2 = unit_vec(b);
        const Scalar lhs2 = pairing(dual.algebra.multiply(fv, f2), av);
        const Scalar rhs2 = pairing(tensor(fv, f2, n), kg.coalgebra.apply_delta(av));
        delta_vs_mult.record(lhs2 == rhs2 ? 0 : 1, w + "," + dual.algebra.basis[b]);
      }
      const bool ok_unit = pairing(dual.algebra.unit, av) == kg.coalgebra.apply_counit(av) &&
                           pairing(fv, kg.algebra.unit) == dual.coalgebra.apply_counit(fv);
      unit_counit.record(ok_unit ? 0 : 1, w);
      const bool ok_s = pairing(dual.apply_antipode(fv), av) == pairing(fv, kg.apply_antipode(av));
      antipode.record(ok_s ? 0 : 1, w);
    }
  }
  mult_vs_delta.into(r, "product-dual-to-coproduct");
  delta_vs_mult.into(r, "coproduct-dual-to-product");
  unit_counit.into(r, "unit-dual-to-counit");
  antipode.into(r, "antipode-self-dual");
  return r;
}

}  // namespace hopfq
