#include "hopfq/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <utility>

#include "hopfq/constructors.hpp"
#include "hopfq/error.hpp"
#include "hopfq/graded.hpp"
#include "hopfq/group.hpp"
#include "hopfq/group_cohomology.hpp"
#include "hopfq/heis_torus.hpp"
#include "hopfq/hopf_cochain.hpp"
#include "hopfq/hopf_verify.hpp"
#include "hopfq/pbw.hpp"
#include "hopfq/scalar_parse.hpp"

namespace hopfq {

namespace {

std::vector<FiniteGroup> axiom_groups() {
  return {cyclic_group(2), cyclic_group(3), z2_cubed(), symmetric_group_s3(), dihedral_group_d4(), pauli_group()};
}

void add_hopf(Report& r, const HopfPresentation& h, const std::string& label) {
  const Report v = verify_hopf(h);
  r.append(v, label + ":");
  const bool flagged = h.commutative || h.cocommutative;
  const bool anti = v.find("antipode-antimultiplicative") != nullptr;
  const bool inv = v.find("antipode-involutive") != nullptr;
  r.add(label + ":antipode-checks-present", anti && inv == flagged ? 0 : 1,
        anti ? "involutivity check does not match the (co)commutativity flags" : "no antimultiplicativity check", 1);
}

// Nonzero values for seeded cochains.
Scalar draw_unit(std::mt19937_64& rng) {
  static const std::vector<Scalar> pool = {
      Scalar(-1), Scalar(2), Scalar(Rational(1, 2)), Scalar(Rational(-3, 5)), Scalar(Cyclotomic::root_of_unity(1, 3)),
      Scalar(Cyclotomic::root_of_unity(1, 4)), Scalar(3) + Scalar(Cyclotomic::root_of_unity(1, 5))};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

GroupCochain random_cochain(const FiniteGroup& g, int arity, bool unital, std::mt19937_64& rng) {
  return GroupCochain::from_function(g, arity, [&](const GroupCochain::Args& args) {
    if (unital) {
      for (auto x : args) {
        if (x == g.identity()) return Scalar(1);
      }
    }
    return draw_unit(rng);
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hopf-axioms", "group-cohomology", "octonions", "hopf-cochain",
                                                 "pbw-gcl",     "moyal",            "graded-galois",
                                                 "sharp-map",   "heis-torus",       "all"};
  return names;
}

Report hopf_axioms_suite() {
  Report r;
  r.name = "hopf-axioms";
  for (const FiniteGroup& g : axiom_groups()) {
    add_hopf(r, group_algebra(g), "k" + g.name());
    add_hopf(r, dual_group_hopf(g), "k^" + g.name());
  }
  for (int p : {2, 3, 5}) add_hopf(r, taft(p, Cyclotomic::root_of_unity(1, p)), "Taft" + std::to_string(p));
  add_hopf(r, ShuffleBialgebra(2, 4).hopf(), "Sh(2,4)");
  add_hopf(r, pareigis_window(4), "Pareigis4");
  return r;
}

Report group_cohomology_suite(std::uint64_t seed, const std::optional<Rational>& theta) {
  Report r;
  r.name = "group-cohomology";
  r.seed = seed;
  const std::vector<Rational> thetas =
      theta ? std::vector<Rational>{*theta} : std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  for (const Rational& t : thetas) r.append(torus_suite(t, 5), "theta=" + t.str() + ":");

  std::mt19937_64 rng(seed);
  for (const FiniteGroup& g : {symmetric_group_s3(), dihedral_group_d4(), z2_cubed()}) {
    const std::string p = g.name() + ":";
    Tally dd1;
    Tally dd2;
    Tally closed;
    Tally assoc;
    Tally quasi;
    std::size_t noncocycles = 0;
    for (int s = 0; s < 5; ++s) {
      const GroupCochain phi = random_cochain(g, 1, false, rng);
      dd1.record(group_coboundary(group_coboundary(phi)).is_constant_one() ? 0 : 1, phi.table().front().str());
      const GroupCochain f = random_cochain(g, 2, false, rng);
      dd2.record(group_coboundary(group_coboundary(f)).is_constant_one() ? 0 : 1, f.table().front().str());
      const GroupCochain b = group_coboundary(random_cochain(g, 1, true, rng));
      closed.record(is_cocycle(b) && is_unital(b) ? 0 : 1, b.table().front().str());
      const TwistedGroupAlgebra tb = twisted_group_algebra(g, b);
      const Report vb = verify_algebra(tb.algebra);
      assoc.record(tb.algebra.assoc == Assoc::Associative && vb.passed() ? 0 : 1, tb.algebra.name);
      const GroupCochain u = random_cochain(g, 2, true, rng);
      const TwistedGroupAlgebra tu = twisted_group_algebra(g, u);
      if (!is_cocycle(u)) ++noncocycles;
      quasi.record((tu.algebra.assoc == Assoc::Quasi) == !is_cocycle(u) && verify_algebra(tu.algebra).passed() ? 0 : 1,
                   tu.algebra.name);
    }
    dd1.into(r, p + "d^2=1-arity-1");
    dd2.into(r, p + "d^2=1-arity-2");
    closed.into(r, p + "coboundary-is-unital-cocycle");
    assoc.into(r, p + "k_dF-associative");
    quasi.into(r, p + "k_F-quasi-associative");
    r.add_expect_nonzero(p + "random-twist-not-cocycle", noncocycles, "seeded unital 2-cochains");
  }
  return r;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = config.seed;
  auto order_or = [&](int fallback) {
    const int k = config.order.value_or(fallback);
    if (k < 0) raise(ErrorKind::SchemaError, "order: must be nonnegative");
    return k;
  };
  auto no_theta = [&] {
    if (config.theta) raise(ErrorKind::SchemaError, "theta: not used by suite " + name);
  };
  Report r;
  if (name == "hopf-axioms") {
    no_theta();
    r = hopf_axioms_suite();
  } else if (name == "group-cohomology") {
    std::optional<Rational> theta;
    if (config.theta) {
      const Scalar t = parse_scalar(*config.theta);
      if (t.is_constant() && t.coeff(0).is_constant()) theta = t.coeff(0).constant().as_rational();
      if (!theta) raise(ErrorKind::SchemaError, "theta: torus parameter must be rational");
    }
    r = group_cohomology_suite(seed, theta);
  } else if (name == "octonions") {
    no_theta();
    r = octonion_suite(seed);
  } else if (name == "hopf-cochain") {
    no_theta();
    r = hopf_cochain_suite(seed);
  } else if (name == "pbw-gcl") {
    no_theta();
    r = pbw_gcl_suite(seed, order_or(4));
  } else if (name == "moyal") {
    no_theta();
    r = moyal_suite(order_or(5));
  } else if (name == "graded-galois") {
    no_theta();
    r = graded_galois_suite();
  } else if (name == "sharp-map") {
    no_theta();
    r = sharp_map_suite();
  } else if (name == "heis-torus") {
    const int k = order_or(4);
    std::optional<Scalar> theta;
    if (config.theta) theta = parse_scalar(*config.theta, k);
    r = heis_torus_suite(seed, k, theta);
  } else if (name == "all") {
    no_theta();
    for (const std::string& s : suite_names()) {
      if (s != "all") r.append(run_suite(s, config), s + ":");
    }
  } else {
    raise(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
  }
  r.name = name;
  r.seed = seed;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace hopfq
