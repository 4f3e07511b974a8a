#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hopfq/graded.hpp"
#include "hopfq/group_cohomology.hpp"
#include "hopfq/heis_torus.hpp"
#include "hopfq/hopf_cochain.hpp"
#include "hopfq/pbw.hpp"
#include "hopfq/suites.hpp"

using namespace hopfq;

namespace {

constexpr std::uint64_t kSeed = kDefaultSeed;

// Collects the first unmet requirement of a criterion.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && problem_.empty()) problem_ = what;
  }
  void suite(const Report& r) {
    for (const auto& c : r.checks) {
      require(c.status == Status::Pass, r.name + ": " + c.id + " " + std::string(to_string(c.status)));
    }
  }
  void check(const Report& r, const std::string& id, std::size_t min_cases = 0) {
    const Check* c = r.find(id);
    require(c != nullptr, r.name + ": missing check " + id);
    if (c == nullptr) return;
    require(c->status == Status::Pass && c->residual_terms == 0, r.name + ": " + id + " failed");
    require(c->cases >= min_cases,
            r.name + ": " + id + " ran " + std::to_string(c->cases) + " < " + std::to_string(min_cases) + " cases");
  }
  bool ok() const { return problem_.empty(); }
  const std::string& problem() const { return problem_; }

 private:
  std::string problem_;
};

Verdict hopf_axioms() {
  Verdict v;
  const Report r = hopf_axioms_suite();
  v.suite(r);
  for (const char* g : {"Z2", "Z3", "Z2^3", "S3", "D4", "Pauli8"}) {
    for (const std::string& host : {std::string("k") + g, std::string("k^") + g}) {
      v.check(r, host + ":antipode-antimultiplicative");
      v.check(r, host + ":antipode-involutive");
    }
  }
  for (const char* host : {"Taft2", "Taft3", "Taft5", "Sh(2,4)", "Pareigis4"}) {
    v.check(r, std::string(host) + ":antipode-antimultiplicative");
    v.check(r, std::string(host) + ":antipode-checks-present");
  }
  v.check(r, "Sh(2,4):antipode-involutive");
  return v;
}

Verdict octonions() {
  Verdict v;
  const Report r = octonion_suite(kSeed, 100);
  v.suite(r);
  v.check(r, "quasi-associativity", 512);
  v.check(r, "alternative-basis", 64);
  v.check(r, "norm-multiplicative-basis", 64);
  v.check(r, "alternative-random", 100);
  v.check(r, "norm-multiplicative-random", 100);
  v.check(r, "non-associative");
  v.check(r, "twist-not-cocycle");
  return v;
}

Verdict torus() {
  Verdict v;
  for (const Rational& theta : {Rational(1, 2), Rational(1, 3), Rational(2, 5)}) {
    const Report r = torus_suite(theta, 5);
    v.suite(r);
    v.check(r, "cocycle-window-5");
    v.check(r, "unital");
    v.check(r, "UV=e^{2πiθ}VU");
  }
  return v;
}

Verdict hopf_cohomology(const Report& hc, const Report& pbw) {
  Verdict v;
  v.suite(hc);
  v.check(hc, "dsquared-1-cochains", 4 * 20);
  v.check(hc, "dsquared-invariant-2-cochains", 4 * 20);
  v.check(hc, "pauli:dsquared(a⊗b)=1⊗c⊗c⊗1");
  v.check(hc, "pauli:dsquared(a⊗b)≠1");
  v.check(pbw, "counterexample-order-4");
  v.check(pbw, "counterexample-nontrivial");
  return v;
}

Verdict twists(const Report& hc) {
  Verdict v;
  v.check(hc, "dF-PhiF", 4 * 20);
  v.check(hc, "pentagon", 4 * 20);
  v.check(hc, "triangle", 4 * 20);
  v.check(hc, "coassociator-conjugation", 4 * 20);
  v.check(hc, "octonions:A_F=k_FG");
  v.check(hc, "octonions:A_F:quasi-associativity", 512);
  v.check(hc, "octonions:pentagon");
  return v;
}

Verdict moyal(const Report& pbw) {
  Verdict v;
  const Report r = moyal_suite(5);
  v.suite(r);
  v.check(r, "dF=1");
  v.check(r, "alpha_g(F)=F'");
  v.check(pbw, "bch-kappa+1", 5);
  v.check(pbw, "bch-kappa-1", 5);
  return v;
}

Verdict gcl(const Report& pbw) {
  Verdict v;
  v.suite(pbw);
  v.check(pbw, "gcl-identity-order-4", 5);
  v.check(pbw, "Phi_theta_theta=exp((θ/2π)²X⊗T⊗Y)");
  v.check(pbw, "F_theta-not-cocycle");
  v.check(pbw, "F_theta-not-equivariant");
  return v;
}

Verdict graded() {
  Verdict v;
  const Report r = graded_galois_suite();
  v.suite(r);
  int agreeing = 0;
  int negatives = 0;
  for (const NamedGraded& g : graded_battery()) {
    const std::string& name = g.algebra.algebra.name;
    v.check(r, name + ":equivalence");
    v.check(r, name + ":ideal-property");
    if (const Check* c = r.find(name + ":equivalence"); c && c->status == Status::Pass) ++agreeing;
    if (!g.expected_strong) ++negatives;
  }
  v.require(agreeing >= 6, "fewer than 6 graded algebras");
  v.require(negatives >= 2, "fewer than 2 negatives");
  for (const char* crossed : {"M2(k)⋊Z2", "k×k⋊Z2", "k×k⋊Z"}) v.check(r, std::string(crossed) + ":expected-strong=1");
  v.check(r, "trivial-action-strong");
  return v;
}

Verdict sharp_map() {
  Verdict v;
  const Report r = sharp_map_suite();
  v.suite(r);
  v.check(r, "sharp-sharp=k*l-exhaustive", 340);
  v.check(r, "coprime<=>pairwise-coprime-exhaustive", 340);
  return v;
}

Verdict heis_torus() {
  Verdict v;
  const Report r = heis_torus_suite(kSeed, 4);
  v.suite(r);
  v.check(r, "U*V=exp(tau*theta)V*U");
  v.check(r, "genass-zero-at-alpha_n");
  v.check(r, "genass-nonzero-when-perturbed");
  v.check(r, "alpha_j∘alpha_k=alpha_{j+k}");
  v.check(r, "zak-U.(V.f)=exp(tau*alpha_n(theta))V.(U.f)");
  v.check(r, "zak-(f.U).V=exp(tau*theta)(f.V).U");
  v.check(r, "pair-balanced");
  v.check(r, "pair-left-bimodule");
  v.check(r, "pair-right-bimodule");
  return v;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const Report hc = hopf_cochain_suite(kSeed, 20);
  const Report pbw = pbw_gcl_suite(kSeed, 4);
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"Hopf axioms on kG, k^G, Taft, shuffle, Pareigis; antipode laws", hopf_axioms},
      {"octonions: quasi-associativity, alternativity, norm, non-associativity", octonions},
      {"torus cochains at 1/2, 1/3, 2/5 on window 5", torus},
      {"Hopf cohomology: d^2 = 1, Pauli and Heisenberg counterexamples", [&] { return hopf_cohomology(hc, pbw); }},
      {"twists: dF = Phi_F, pentagon, triangle, octonion module twist", [&] { return twists(hc); }},
      {"Moyal twist at order 5, gauge identity, BCH at orders 2-6", [&] { return moyal(pbw); }},
      {"coassociator identity, Phi_{theta,theta}, F_theta not a cocycle", [&] { return gcl(pbw); }},
      {"graded: four-way equivalence, crossed products, ideal property", graded},
      {"sharp map: double sharp and coprimality, exhaustive", sharp_map},
      {"Heisenberg torus: star product, alpha, Zak actions, pairing", heis_torus},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += v.ok() ? 0 : 1;
    std::printf("[%s] %2zu %s%s\n", v.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.ok() ? "" : (" -- " + v.problem()).c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
