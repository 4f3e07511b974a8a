#include "hopfq/presentation.hpp"

#include <algorithm>

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

// Collects (index, coeff) pairs and merges duplicates.
SparseVec normalize(std::vector<std::pair<std::uint32_t, Scalar>> terms) {
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

}  // namespace

const SparseVec& AlgebraPresentation::product(std::uint32_t i, std::uint32_t j) const {
  const auto& e = mult.at(static_cast<std::size_t>(i) * dim() + j);
  if (!e) raise(ErrorKind::WindowOverflow, name + ": product " + basis[i] + "*" + basis[j] + " leaves the window");
  return *e;
}

SparseVec AlgebraPresentation::multiply(const SparseVec& x, const SparseVec& y) const {
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const Scalar ab = a * b;
      for (const auto& [k, c] : product(i, j)) terms.emplace_back(k, ab * c);
    }
  }
  return normalize(std::move(terms));
}

SparseVec AlgebraPresentation::multiply_flat(const SparseVec& xy) const {
  const auto d = static_cast<std::uint32_t>(dim());
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (const auto& [ij, a] : xy) {
    for (const auto& [k, c] : product(ij / d, ij % d)) terms.emplace_back(k, a * c);
  }
  return normalize(std::move(terms));
}

const SparseVec& CoalgebraPresentation::delta(std::uint32_t i) const {
  const auto& e = coproduct.at(i);
  if (!e) raise(ErrorKind::WindowOverflow, "coproduct of " + basis[i] + " leaves the window");
  return *e;
}

SparseVec CoalgebraPresentation::apply_delta(const SparseVec& x) const {
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (const auto& [i, a] : x) {
    for (const auto& [k, c] : delta(i)) terms.emplace_back(k, a * c);
  }
  return normalize(std::move(terms));
}

Scalar CoalgebraPresentation::apply_counit(const SparseVec& x) const {
  Scalar out;
  for (const auto& [i, a] : x) {
    if (!counit[i].is_zero()) out += a * counit[i];
  }
  return out;
}

SparseVec HopfPresentation::apply_antipode(const SparseVec& x) const {
  if (!antipode) raise(ErrorKind::SchemaError, name() + " has no antipode");
  return apply_map(*antipode, x);
}

LinearMap identity_map(std::size_t d) { return identity_matrix(d); }

SparseVec apply_map(const LinearMap& f, const SparseVec& x) {
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (const auto& [c, a] : x) {
    for (std::size_t r = 0; r < f.size(); ++r) {
      if (!f[r][c].is_zero()) terms.emplace_back(static_cast<std::uint32_t>(r), a * f[r][c]);
    }
  }
  return normalize(std::move(terms));
}

LinearMap convolution(const CoalgebraPresentation& c, const AlgebraPresentation& a, const LinearMap& f,
                      const LinearMap& g) {
  const auto dc = static_cast<std::uint32_t>(c.dim());
  LinearMap out(a.dim(), std::vector<Scalar>(c.dim()));
  for (std::uint32_t b = 0; b < dc; ++b) {
    SparseVec acc;
    for (const auto& [ij, coeff] : c.delta(b)) {
      SparseVec fx = apply_map(f, SparseVec{{ij / dc, Scalar(1)}});
      SparseVec gy = apply_map(g, SparseVec{{ij % dc, Scalar(1)}});
      acc = axpy(acc, coeff, a.multiply(fx, gy));
    }
    for (const auto& [r, v] : acc) out[r][b] = v;
  }
  return out;
}

LinearMap unit_counit(const CoalgebraPresentation& c, const AlgebraPresentation& a) {
  LinearMap out(a.dim(), std::vector<Scalar>(c.dim()));
  for (std::size_t b = 0; b < c.dim(); ++b) {
    for (const auto& [r, v] : a.unit) out[r][b] = v * c.counit[b];
  }
  return out;
}

SparseVec tensor(const SparseVec& x, const SparseVec& y, std::uint32_t dq) {
  SparseVec out;
  out.reserve(x.size() * y.size());
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      Scalar p = a * b;
      if (!p.is_zero()) out.emplace_back(i * dq + j, std::move(p));
    }
  }
  return out;
}

std::string flat_label(const std::vector<std::string>& basis, std::uint32_t idx, int arity) {
  const auto d = static_cast<std::uint32_t>(basis.size());
  std::vector<std::string> parts(arity);
  for (int k = arity - 1; k >= 0; --k) {
    parts[k] = basis[idx % d];
    idx /= d;
  }
  std::string out;
  for (int k = 0; k < arity; ++k) out += (k ? "⊗" : "") + parts[k];
  return out;
}

std::string render(const std::vector<std::string>& basis, const SparseVec& v, int arity) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*" + flat_label(basis, i, arity);
  }
  return out;
}

}  // namespace hopfq
