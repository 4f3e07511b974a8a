#include "hopfq/hopf_verify.hpp"

#include <algorithm>

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

std::uint32_t ipow(std::uint32_t d, int e) {
  std::uint32_t out = 1;
  for (int i = 0; i < e; ++i) out *= d;
  return out;
}

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

SparseVec basis_vec(std::uint32_t i) { return SparseVec{{i, Scalar(1)}}; }

// Runs a per-case check, treating window overflow as "not applicable".
template <class F>
void run_case(Tally&, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::WindowOverflow && e.kind() != ErrorKind::LengthOverflow) throw;
  }
}

std::size_t residual(const SparseVec& a, const SparseVec& b) { return axpy(a, Scalar(-1), b).size(); }

}  // namespace

SparseVec map_leg(const SparseVec& t, int arity, int leg, std::uint32_t d,
                  const std::function<SparseVec(std::uint32_t)>& f, int out_arity) {
  const std::uint32_t suffix_size = ipow(d, arity - leg - 1);
  const std::uint32_t out_size = ipow(d, out_arity);
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (const auto& [idx, c] : t) {
    const std::uint32_t suffix = idx % suffix_size;
    const std::uint32_t digit = (idx / suffix_size) % d;
    const std::uint32_t prefix = idx / suffix_size / d;
    for (const auto& [fi, fc] : f(digit)) {
      terms.emplace_back((prefix * out_size + fi) * suffix_size + suffix, c * fc);
    }
  }
  return merge(std::move(terms));
}

SparseVec multiply_legs(const AlgebraPresentation& a, const SparseVec& x, const SparseVec& y, int arity) {
  const auto d = static_cast<std::uint32_t>(a.dim());
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  std::vector<std::uint32_t> xi(arity);
  std::vector<std::uint32_t> yi(arity);
  for (const auto& [ix, cx] : x) {
    for (const auto& [iy, cy] : y) {
      std::uint32_t u = ix;
      std::uint32_t v = iy;
      for (int k = arity - 1; k >= 0; --k) {
        xi[k] = u % d;
        yi[k] = v % d;
        u /= d;
        v /= d;
      }
      SparseVec acc{{0, cx * cy}};
      for (int k = 0; k < arity; ++k) acc = tensor(acc, a.product(xi[k], yi[k]), d);
      for (auto& e : acc) terms.push_back(std::move(e));
    }
  }
  return merge(std::move(terms));
}

Report verify_algebra(const AlgebraPresentation& a) {
  Report r;
  r.name = a.name;
  const auto d = static_cast<std::uint32_t>(a.dim());
  Tally unit;
  for (std::uint32_t i = 0; i < d; ++i) {
    run_case(unit, [&] {
      const std::size_t left = residual(a.multiply(a.unit, basis_vec(i)), basis_vec(i));
      const std::size_t right = residual(a.multiply(basis_vec(i), a.unit), basis_vec(i));
      unit.record(left + right, "1*" + a.basis[i]);
    });
  }
  unit.into(r, "unit");
  if (a.assoc == Assoc::Unchecked) return r;
  Tally assoc;
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      for (std::uint32_t k = 0; k < d; ++k) {
        run_case(assoc, [&] {
          const SparseVec lhs = a.multiply(a.product(i, j), basis_vec(k));
          SparseVec rhs;
          if (a.assoc == Assoc::Associative) {
            rhs = a.multiply(basis_vec(i), a.product(j, k));
          } else {
            for (const auto& [t, c] : a.associator.at(flat3(i, j, k, d))) {
              const std::uint32_t x = t / (d * d);
              const std::uint32_t y = (t / d) % d;
              const std::uint32_t z = t % d;
              rhs = axpy(rhs, c, a.multiply(basis_vec(x), a.product(y, z)));
            }
          }
          assoc.record(residual(lhs, rhs), a.basis[i] + "," + a.basis[j] + "," + a.basis[k]);
        });
      }
    }
  }
  assoc.into(r, a.assoc == Assoc::Associative ? "associativity" : "quasi-associativity");
  return r;
}

Report verify_coalgebra(const CoalgebraPresentation& c) {
  Report r;
  const auto d = static_cast<std::uint32_t>(c.dim());
  auto delta = [&](std::uint32_t i) { return c.delta(i); };
  auto eps = [&](std::uint32_t i) {
    SparseVec out;
    if (!c.counit[i].is_zero()) out.emplace_back(0, c.counit[i]);
    return out;
  };
  Tally coassoc;
  Tally counit;
  for (std::uint32_t i = 0; i < d; ++i) {
    run_case(coassoc, [&] {
      const SparseVec& di = c.delta(i);
      const SparseVec left = map_leg(di, 2, 0, d, delta, 2);
      const SparseVec right = map_leg(di, 2, 1, d, delta, 2);
      coassoc.record(residual(left, right), c.basis[i]);
    });
    run_case(counit, [&] {
      const SparseVec& di = c.delta(i);
      const SparseVec left = map_leg(di, 2, 0, d, eps, 0);
      const SparseVec right = map_leg(di, 2, 1, d, eps, 0);
      counit.record(residual(left, basis_vec(i)) + residual(right, basis_vec(i)), c.basis[i]);
    });
  }
  coassoc.into(r, "coassociativity");
  counit.into(r, "counit");
  return r;
}

Report verify_hopf(const HopfPresentation& h) {
  const AlgebraPresentation& a = h.algebra;
  const CoalgebraPresentation& c = h.coalgebra;
  if (a.dim() != c.dim()) raise(ErrorKind::SchemaError, h.name() + ": algebra and coalgebra dimensions differ");
  const auto d = static_cast<std::uint32_t>(a.dim());
  Report r = verify_algebra(a);
  r.name = h.name();
  r.append(verify_coalgebra(c));

  Tally delta_mult;
  Tally eps_mult;
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::string w = a.basis[i] + "," + a.basis[j];
      run_case(delta_mult, [&] {
        const SparseVec lhs = c.apply_delta(a.product(i, j));
        const SparseVec rhs = multiply_legs(a, c.delta(i), c.delta(j), 2);
        delta_mult.record(residual(lhs, rhs), w);
      });
      run_case(eps_mult, [&] {
        const Scalar lhs = c.apply_counit(a.product(i, j));
        eps_mult.record(lhs == c.counit[i] * c.counit[j] ? 0 : 1, w);
      });
    }
  }
  delta_mult.into(r, "coproduct-multiplicative");
  r.add("coproduct-unital", residual(c.apply_delta(a.unit), tensor(a.unit, a.unit, d)), "Δ(1)", 1);
  eps_mult.into(r, "counit-multiplicative");
  r.add("counit-unital", c.apply_counit(a.unit) == Scalar(1) ? 0 : 1, "ε(1)", 1);

  if (!h.antipode) return r;
  const Matrix& s = *h.antipode;
  auto apply_s = [&](std::uint32_t i) {
    if (!h.antipode_window.empty() && !h.antipode_window[i]) {
      raise(ErrorKind::WindowOverflow, "antipode of " + a.basis[i] + " leaves the window");
    }
    return apply_map(s, basis_vec(i));
  };
  Tally left;
  Tally right;
  for (std::uint32_t i = 0; i < d; ++i) {
    const SparseVec expect = scale(a.unit, c.counit[i]);
    run_case(left, [&] {
      const SparseVec sl = map_leg(c.delta(i), 2, 0, d, apply_s, 1);
      left.record(residual(a.multiply_flat(sl), expect), a.basis[i]);
    });
    run_case(right, [&] {
      const SparseVec sr = map_leg(c.delta(i), 2, 1, d, apply_s, 1);
      right.record(residual(a.multiply_flat(sr), expect), a.basis[i]);
    });
  }
  left.into(r, "antipode-left");
  right.into(r, "antipode-right");
  r.add("antipode-unital", residual(apply_map(s, a.unit), a.unit), "S(1)", 1);

  Tally anti;
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      run_case(anti, [&] {
        SparseVec lhs;
        for (const auto& [k, v] : a.product(i, j)) lhs = axpy(lhs, v, apply_s(k));
        const SparseVec rhs = a.multiply(apply_s(j), apply_s(i));
        anti.record(residual(lhs, rhs), a.basis[i] + "," + a.basis[j]);
      });
    }
  }
  anti.into(r, "antipode-antimultiplicative");

  if (h.commutative || h.cocommutative) {
    Tally inv;
    for (std::uint32_t i = 0; i < d; ++i) {
      run_case(inv, [&] {
        SparseVec twice;
        for (const auto& [k, v] : apply_s(i)) twice = axpy(twice, v, apply_s(k));
        inv.record(residual(twice, basis_vec(i)), a.basis[i]);
      });
    }
    inv.into(r, "antipode-involutive");
  }
  return r;
}

}  // namespace hopfq
