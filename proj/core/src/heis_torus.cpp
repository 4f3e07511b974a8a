#include "hopfq/heis_torus.hpp"

#include <cstdlib>
#include <random>
#include <vector>

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

/// e^{2πi r} for rational r.
Cyclotomic e_tau(const Rational& r) {
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  const mpz_class rem = num % den;
  return Cyclotomic::root_of_unity(rem.get_si(), den.get_si());
}

Scalar factorial_inverse(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  return Scalar(Rational(1) / f);
}

void pe_add(PolyExp& acc, const std::pair<int, Rational>& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

PolyExp pe_scaled(const PolyExp& g, const Scalar& s) {
  PolyExp out;
  for (const auto& [k, c] : g) pe_add(out, k, c * s);
  return out;
}

PolyExp pe_mul(const PolyExp& a, const PolyExp& b) {
  PolyExp out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) pe_add(out, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return out;
}

PolyExp pe_derivative(const PolyExp& g) {
  PolyExp out;
  for (const auto& [k, c] : g) {
    if (k.first > 0) pe_add(out, {k.first - 1, k.second}, c * Scalar(k.first));
    if (!k.second.is_zero()) pe_add(out, k, c * Scalar(k.second) * Scalar::tau());
  }
  return out;
}

/// g(y + r) for rational r.
PolyExp pe_shift(const PolyExp& g, const Rational& r) {
  if (r.is_zero()) return g;
  PolyExp out;
  for (const auto& [k, c] : g) {
    const auto [p, freq] = k;
    const Scalar phase = Scalar(e_tau(freq * r)) * c;
    Rational binom(1);
    Rational rpow(1);
    // (y + r)^p = Σ_q C(p,q) r^{p-q} y^q, from q = p down
    for (int q = p; q >= 0; --q) {
      pe_add(out, {q, freq}, phase * Scalar(binom * rpow));
      binom = binom * Rational(q) / Rational(p - q + 1);
      rpow *= r;
    }
  }
  return out;
}

/// g(y + d0 + d1·y) = Σ_k (d0 + d1 y)^k / k! · g^{(k)}(y) for d0, d1 in ħC[[ħ]].
PolyExp pe_shift_formal(const PolyExp& g, const Scalar& d0, const Scalar& d1, int order) {
  if (d0.is_zero() && d1.is_zero()) return g;
  PolyExp delta;
  pe_add(delta, {0, Rational(0)}, d0);
  pe_add(delta, {1, Rational(0)}, d1);
  PolyExp out = g;
  PolyExp deriv = g;
  PolyExp power{{{0, Rational(0)}, Scalar(1)}};
  for (int k = 1; k <= order; ++k) {
    deriv = pe_derivative(deriv);
    power = pe_mul(power, delta);
    if (power.empty() || deriv.empty()) break;
    for (const auto& [key, c] : pe_mul(power, deriv)) pe_add(out, key, c * factorial_inverse(k));
  }
  return out;
}

/// g · e^{s y} for s in ħC[[ħ]].
PolyExp pe_mul_exp(const PolyExp& g, const Scalar& s, int order) {
  if (s.is_zero()) return g;
  PolyExp e;
  Scalar power(1);
  for (int k = 0; k <= order && !power.is_zero(); ++k) {
    pe_add(e, {k, Rational(0)}, power * factorial_inverse(k));
    power *= s;
  }
  return pe_mul(g, e);
}

/// g · e^{±τ(y - j/n)}
PolyExp pe_mul_character(const PolyExp& g, int sign, int j, int n) {
  PolyExp out;
  const Scalar phase(e_tau(Rational(-sign * j, n)));
  for (const auto& [k, c] : g) pe_add(out, {k.first, k.second + Rational(sign)}, c * phase);
  return out;
}

std::string pe_str(const PolyExp& g) {
  std::string s;
  for (const auto& [k, c] : g) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (k.first != 0) s += "*y^" + std::to_string(k.first);
    if (!k.second.is_zero()) s += "*e(" + k.second.str() + "y)";
  }
  return s.empty() ? "0" : s;
}

}  // namespace

HeisElement HeisElement::monomial(int order, int m, int n, int p, const Rational& c, const Scalar& coeff) {
  HeisElement h(order);
  h.add(HeisKey{m, n, p, c}, coeff);
  return h;
}

void HeisElement::add(const HeisKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeisElement HeisElement::operator+(const HeisElement& b) const {
  HeisElement out(common_order(order_, b.order_));
  out.terms_ = terms_;
  for (const auto& [k, c] : b.terms_) out.add(k, c);
  return out;
}

HeisElement HeisElement::operator-(const HeisElement& b) const { return *this + b.scaled(Scalar(-1)); }

HeisElement HeisElement::scaled(const Scalar& s) const {
  HeisElement out(order_);
  for (const auto& [k, c] : terms_) out.add(k, c * s);
  return out;
}

std::optional<int> HeisElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int n = terms_.begin()->first.n;
  for (const auto& [k, c] : terms_) {
    if (k.n != n) return std::nullopt;
  }
  return n;
}

int HeisElement::valuation() const {
  int v = -1;
  for (const auto& [k, c] : terms_) {
    const int cv = c.valuation();
    if (v < 0 || cv < v) v = cv;
  }
  return v;
}

HeisElement HeisElement::pointwise(const HeisElement& b) const {
  HeisElement out(common_order(order_, b.order_));
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add(HeisKey{ka.m + kb.m, ka.n + kb.n, ka.p + kb.p, ka.c + kb.c}, ca * cb);
  }
  return out;
}

std::string HeisElement::str() const {
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")[m=" + std::to_string(k.m) + ",n=" + std::to_string(k.n) + ",p=" + std::to_string(k.p) +
         ",c=" + k.c.str() + "]";
  }
  return s.empty() ? "0" : s;
}

HeisElement vf_apply(VectorField field, const HeisElement& f) {
  HeisElement out(f.order());
  const Scalar tau = Scalar::tau();
  for (const auto& [k, c] : f.terms()) {
    switch (field) {
      case VectorField::X:
        out.add(k, c * tau * Scalar(k.m));
        out.add(HeisKey{k.m, k.n, k.p + 1, k.c}, c * tau * Scalar(k.n));
        break;
      case VectorField::Y:
        if (k.p > 0) out.add(HeisKey{k.m, k.n, k.p - 1, k.c}, c * Scalar(k.p));
        out.add(k, c * tau * Scalar(k.c));
        break;
      case VectorField::T:
        out.add(k, c * tau * Scalar(k.n));
        break;
    }
  }
  return out;
}

void check_theta(const Scalar& theta) {
  if (!theta.coeff(0).is_zero()) raise(ErrorKind::NotFormallyNilpotent, "θ must lie in ħC[[ħ]]");
}

HeisElement star(const HeisElement& a, const HeisElement& b, const Scalar& theta) {
  const int order = common_order(a.order(), b.order());
  check_theta(theta);
  const Scalar s = theta * Scalar::tau(-1);
  HeisElement out = a.pointwise(b);
  HeisElement xa = a;
  HeisElement yb = b;
  Scalar power(1);
  for (int k = 1; k <= order; ++k) {
    power *= s;
    if (power.is_zero()) break;
    xa = vf_apply(VectorField::X, xa);
    yb = vf_apply(VectorField::Y, yb);
    if (xa.is_zero() || yb.is_zero()) break;
    out = out + xa.pointwise(yb).scaled(power * factorial_inverse(k));
  }
  return out;
}

Scalar alpha(const Scalar& theta, int k) { return theta * series_invert(Scalar(1) + Scalar(k) * theta); }

HeisElement assoc_residual(const HeisElement& a, const HeisElement& b, const HeisElement& c, const Scalar& theta,
                           const Scalar& theta2) {
  if (!b.is_zero() && !b.degree()) raise(ErrorKind::NotHomogeneous, "the middle argument must be homogeneous");
  return star(star(a, b, theta2), c, theta) - star(a, star(b, c, theta), theta2);
}

HeisElement m3_image(const HeisElement& f) {
  HeisElement out(f.order());
  for (const auto& [k, c] : f.terms()) {
    const Scalar phase = Scalar(e_tau(k.c)) * c;
    Rational binom(1);
    for (int q = 0; q <= k.p; ++q) {
      out.add(HeisKey{k.m + k.n, k.n, q, k.c}, phase * Scalar(binom));
      binom = binom * Rational(k.p - q) / Rational(q + 1);
    }
  }
  return out;
}

bool m3_membership(const HeisElement& f) { return m3_image(f) == f; }

ZakElement::ZakElement(int degree, int order) : degree_(degree), order_(order) {
  if (degree == 0) raise(ErrorKind::ZeroDegree, "Zak elements need a nonzero degree");
}

void ZakElement::add(int j, int p, const Rational& c, const Scalar& coeff) {
  PolyExp& part = parts_[j];
  pe_add(part, {p, c}, coeff);
  if (part.empty()) parts_.erase(j);
}

void ZakElement::add(int j, const PolyExp& f) {
  PolyExp& part = parts_[j];
  for (const auto& [k, c] : f) pe_add(part, k, c);
  if (part.empty()) parts_.erase(j);
}

ZakElement ZakElement::operator-(const ZakElement& b) const {
  if (b.degree_ != degree_) raise(ErrorKind::NotHomogeneous, "degrees differ");
  ZakElement out(degree_, common_order(order_, b.order_));
  out.parts_ = parts_;
  for (const auto& [j, part] : b.parts_) out.add(j, pe_scaled(part, Scalar(-1)));
  return out;
}

ZakElement ZakElement::scaled(const Scalar& s) const {
  ZakElement out(degree_, order_);
  for (const auto& [j, part] : parts_) out.add(j, pe_scaled(part, s));
  return out;
}

std::size_t ZakElement::term_count() const {
  std::size_t n = 0;
  for (const auto& [j, part] : parts_) n += part.size();
  return n;
}

std::string ZakElement::str() const {
  std::string s;
  for (const auto& [j, part] : parts_) {
    if (!s.empty()) s += "; ";
    s += "j=" + std::to_string(j) + ": " + pe_str(part);
  }
  return s.empty() ? "0" : s;
}

ZakElement zak_transform(const HeisElement& f) {
  const auto n = f.degree();
  if (!n) raise(ErrorKind::NotHomogeneous, "the Zak transform needs a homogeneous nonzero element");
  ZakElement out(*n, f.order());
  for (const auto& [k, c] : f.terms()) {
    out.add(k.m, pe_shift(PolyExp{{{k.p, k.c}, c}}, Rational(-k.m, *n)));
  }
  return out;
}

namespace {

enum class Side { Left, Right };

/// One generator on a Zak element. `shift` is the formal part of the U-shift
/// and `dilate` the exponent rate of the extra e^{rate·y} factor on V.
ZakElement act_letter(const ZakElement& f, char letter, const Scalar& shift, const Scalar& rate) {
  const int n = f.degree();
  ZakElement out(n, f.order());
  for (const auto& [j, part] : f.parts()) {
    switch (letter) {
      case 'U':
        out.add(j + 1, pe_shift_formal(pe_shift(part, Rational(-1, n)), shift, Scalar(0), f.order()));
        break;
      case 'u':
        out.add(j - 1, pe_shift_formal(pe_shift(part, Rational(1, n)), -shift, Scalar(0), f.order()));
        break;
      case 'V':
        out.add(j, pe_mul_exp(pe_mul_character(part, 1, j, n), rate, f.order()));
        break;
      case 'v':
        out.add(j, pe_mul_exp(pe_mul_character(part, -1, j, n), -rate, f.order()));
        break;
      default:
        raise(ErrorKind::SchemaError, std::string("unknown generator '") + letter + "'");
    }
  }
  return out;
}

ZakElement act_word(const std::string& word, const ZakElement& f, const Scalar& theta, ZakConvention convention,
                    Side side) {
  check_theta(theta);
  const int n = f.degree();
  const Scalar tau = Scalar::tau();
  Scalar shift;
  Scalar rate;
  if (side == Side::Left) {
    const Scalar theta2 = alpha(theta, n);
    if (convention == ZakConvention::Main) {
      shift = theta2;
    } else {
      rate = -tau * Scalar(n) * theta2;
    }
  } else if (convention == ZakConvention::Main) {
    rate = tau * Scalar(n) * theta;
  } else {
    shift = -theta;
  }
  ZakElement out = f;
  if (side == Side::Left) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_letter(out, *it, shift, rate);
  } else {
    for (char letter : word) out = act_letter(out, letter, shift, rate);
  }
  return out;
}

}  // namespace

ZakElement zak_act_left(const std::string& word, const ZakElement& f, const Scalar& theta, ZakConvention convention) {
  return act_word(word, f, theta, convention, Side::Left);
}

ZakElement zak_act_right(const ZakElement& f, const std::string& word, const Scalar& theta,
                         ZakConvention convention) {
  return act_word(word, f, theta, convention, Side::Right);
}

ZakElement zak_pair(const ZakElement& f1, const ZakElement& f2, const Scalar& theta) {
  const int n = f1.degree();
  const int p = f2.degree();
  if (n + p == 0) raise(ErrorKind::DegenerateDegrees, "n + p must be nonzero");
  check_theta(theta);
  const int order = common_order(f1.order(), f2.order());
  ZakElement out(n + p, order);
  for (const auto& [j, g1] : f1.parts()) {
    for (const auto& [k, g2] : f2.parts()) {
      const Rational r(j * p - k * n, n * (n + p));
      const Rational s(j * p - k * n, p * (n + p));
      const PolyExp left = pe_shift(g1, r);
      const PolyExp right =
          pe_shift_formal(pe_shift(g2, -s), Scalar(p) * theta * Scalar(s), Scalar(n) * theta, order);
      out.add(j + k, pe_mul(left, right));
    }
  }
  return out;
}

HeisElement word_element(const std::string& word, const Scalar& theta, int order) {
  HeisElement out = HeisElement::one(order);
  for (char letter : word) {
    HeisElement g(order);
    switch (letter) {
      case 'U':
        g = HeisElement::u(order);
        break;
      case 'u':
        g = HeisElement::monomial(order, -1, 0, 0, Rational(0));
        break;
      case 'V':
        g = HeisElement::v(order);
        break;
      case 'v':
        g = HeisElement::monomial(order, 0, 0, 0, Rational(-1));
        break;
      default:
        raise(ErrorKind::SchemaError, std::string("unknown generator '") + letter + "'");
    }
    out = star(out, g, theta);
  }
  return out;
}

HeisElement random_heis(std::uint64_t seed, int n, int order) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> winding(-2, 2);
  std::uniform_int_distribution<int> power(0, 2);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  const Rational freqs[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(1, 3)};
  std::uniform_int_distribution<int> pick(0, 4);
  HeisElement out(order);
  while (out.terms().size() < 3) {
    int a = num(rng);
    if (a == 0) a = 1;
    const Scalar coeff = Scalar(Rational(a, den(rng))) + Series::hbar(order) * Scalar(Rational(num(rng), den(rng)));
    out.add(HeisKey{winding(rng), n, power(rng), freqs[pick(rng)]}, coeff);
  }
  return out;
}

namespace {

std::size_t terms(const HeisElement& h) { return h.terms().size(); }

}  // namespace

Report heis_torus_suite(std::uint64_t seed, int order, const std::optional<Scalar>& theta) {
  Report r;
  r.name = "heis-torus";
  r.seed = seed;
  const int k = order;
  const Scalar hb = Series::hbar(k);
  const Scalar tau = Scalar::tau();
  std::vector<Scalar> thetas = {hb, hb + hb * hb};
  if (theta) {
    check_theta(*theta);
    thetas = {theta->at_order(k)};
  }
  const HeisElement u = HeisElement::u(k);
  const HeisElement v = HeisElement::v(k);
  std::uint64_t draw = seed * 1000;

  // vector fields
  {
    const HeisElement f = random_heis(++draw, 2, k);
    r.add("T=tau*n", terms(vf_apply(VectorField::T, f) - f.scaled(tau * Scalar(2))));
    r.add("X(U)=tau*U", terms(vf_apply(VectorField::X, u) - u.scaled(tau)));
    r.add("Y(V)=tau*V", terms(vf_apply(VectorField::Y, v) - v.scaled(tau)));
  }

  // star product basics
  Tally torus;
  Tally unit;
  Tally additive;
  Tally derivation;
  Tally pointwise;
  for (const Scalar& th : thetas) {
    torus.record(terms(star(u, v, th) - star(v, u, th).scaled(series_exp(tau * th))), th.str());
    for (int n : {-1, 0, 2}) {
      const HeisElement a = random_heis(++draw, n, k);
      const HeisElement b = random_heis(++draw, 1, k);
      const HeisElement one = HeisElement::one(k);
      unit.record(terms(star(a, one, th) - a) + terms(star(one, a, th) - a), a.str());
      const HeisElement ab = star(a, b, th);
      additive.record(ab.degree() == n + 1 ? 0 : 1, ab.str());
      const HeisElement lhs = vf_apply(VectorField::T, ab);
      const HeisElement rhs = star(vf_apply(VectorField::T, a), b, th) + star(a, vf_apply(VectorField::T, b), th);
      derivation.record(terms(lhs - rhs), a.str());
      pointwise.record(terms(star(a, b, Scalar(0).at_order(k)) - a.pointwise(b)), a.str());
    }
  }
  torus.into(r, "U*V=exp(tau*theta)V*U");
  unit.into(r, "unit");
  additive.into(r, "degree-additive");
  derivation.into(r, "T-derivation");
  pointwise.into(r, "theta=0-pointwise");

  // α
  {
    const Scalar h5 = Series::hbar(5);
    r.add("alpha_0=id", !(alpha(h5, 0) == h5));
    const Scalar geometric = h5 - h5.pow(2) + h5.pow(3) - h5.pow(4) + h5.pow(5);
    r.add("alpha_1(h)=h-h^2+...", !(alpha(h5, 1) == geometric));
    Tally group;
    for (const Scalar& th : {h5, h5 + h5 * h5, h5 * Scalar(Rational(2, 3)) - h5.pow(3)}) {
      for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
          group.record(!(alpha(alpha(th, j), i) == alpha(th, i + j)), std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
    group.into(r, "alpha_j∘alpha_k=alpha_{j+k}");
  }

  // generalized associativity
  Tally at_alpha;
  Tally perturbed;
  std::string perturbed_example;
  for (int n : {-2, -1, 1, 2}) {
    for (const Scalar& th : thetas) {
      const HeisElement a0 = random_heis(++draw, 0, k);
      const HeisElement a = a0 + random_heis(++draw, 1, k);
      const HeisElement b = random_heis(++draw, n, k);
      const HeisElement c = random_heis(++draw, -1, k);
      const Scalar th2 = alpha(th, n);
      at_alpha.record(terms(assoc_residual(a, b, c, th, th2)), "n=" + std::to_string(n) + " theta=" + th.str());
      for (int j = 1; j <= k; ++j) {
        const HeisElement res = assoc_residual(a, b, c, th, th2 + hb.pow(j));
        perturbed.record(res.is_zero(), "n=" + std::to_string(n) + " j=" + std::to_string(j));
        if (perturbed_example.empty() && !res.is_zero()) {
          perturbed_example = "n=" + std::to_string(n) + " theta'=alpha_n(theta)+h: residual valuation " +
                              std::to_string(res.valuation()) + ", " + std::to_string(terms(res)) + " terms";
        }
      }
    }
  }
  at_alpha.into(r, "genass-zero-at-alpha_n");
  perturbed.into(r, "genass-nonzero-when-perturbed").witness = perturbed_example;
  {
    const HeisElement a = random_heis(++draw, 0, k);
    const HeisElement b = random_heis(++draw, 1, k);
    const HeisElement c = random_heis(++draw, 0, k);
    const HeisElement res = assoc_residual(a, b, c, hb, hb);
    r.add("genass-deg1-theta'=theta-first-at-h^2", res.valuation() != 2,
          "valuation " + std::to_string(res.valuation()));
    r.add("genass-deg0-theta'=theta", terms(assoc_residual(a, c, b, hb, hb)));
  }

  // A₀^θ associative, A_n a bimodule
  Tally a0;
  Tally bimodule;
  for (const Scalar& th : thetas) {
    const HeisElement a = random_heis(++draw, 0, k);
    const HeisElement b = random_heis(++draw, 0, k);
    const HeisElement c = random_heis(++draw, 0, k);
    a0.record(terms(assoc_residual(a, b, c, th, th)), th.str());
    for (int n : {-1, 2}) {
      const HeisElement f = random_heis(++draw, n, k);
      const Scalar th2 = alpha(th, n);
      bimodule.record(terms(assoc_residual(a, f, c, th, th2)), "mixed n=" + std::to_string(n));
      bimodule.record(terms(assoc_residual(a, b, f, th2, th2)), "left n=" + std::to_string(n));
      bimodule.record(terms(assoc_residual(f, b, c, th, th)), "right n=" + std::to_string(n));
    }
  }
  a0.into(r, "A0-associative");
  bimodule.into(r, "A_n-bimodule");

  // M₃
  r.add("m3-torus-function", !m3_membership(HeisElement::monomial(k, 2, 0, 0, Rational(-3))));
  r.add_expect_nonzero("m3-degree-1-monomial-not-member", !m3_membership(HeisElement::monomial(k, 0, 1, 0, Rational(0))));
  {
    const HeisElement f = HeisElement::monomial(k, 1, 0, 1, Rational(1, 2));
    r.add_expect_nonzero("m3-residual", terms(m3_image(f) - f), (m3_image(f) - f).str());
  }

  // Zak side
  for (auto convention : {ZakConvention::Main, ZakConvention::Footnote}) {
    const std::string tag = convention == ZakConvention::Main ? "" : "footnote:";
    Tally left_comm;
    Tally right_comm;
    Tally left_star;
    Tally right_star;
    for (int n : {1, 2}) {
      for (const Scalar& th : thetas) {
        const HeisElement f = random_heis(++draw, n, k);
        const ZakElement zf = zak_transform(f);
        const Scalar th2 = alpha(th, n);
        const ZakElement uv = zak_act_left("UV", zf, th, convention);
        const ZakElement vu = zak_act_left("VU", zf, th, convention);
        left_comm.record((uv - vu.scaled(series_exp(tau * th2))).term_count(), "n=" + std::to_string(n));
        const ZakElement fu_v = zak_act_right(zf, "UV", th, convention);
        const ZakElement fv_u = zak_act_right(zf, "VU", th, convention);
        right_comm.record((fu_v - fv_u.scaled(series_exp(tau * th))).term_count(), "n=" + std::to_string(n));
        for (const std::string word : {"U", "V", "u", "v", "UV", "VuU"}) {
          // the footnote actions compose in the opposite order
          const bool main = convention == ZakConvention::Main;
          const std::string ordered = main ? word : std::string(word.rbegin(), word.rend());
          const HeisElement w2 = word_element(ordered, main ? th2 : -th2, k);
          const HeisElement w = word_element(ordered, main ? th : -th, k);
          const HeisElement left = main ? star(w2, f, th2) : star(f, w2, -th2);
          const HeisElement right = main ? star(f, w, th) : star(w, f, -th);
          left_star.record((zak_act_left(word, zf, th, convention) - zak_transform(left)).term_count(),
                           "n=" + std::to_string(n) + " " + word);
          right_star.record((zak_act_right(zf, word, th, convention) - zak_transform(right)).term_count(),
                            "n=" + std::to_string(n) + " " + word);
        }
      }
    }
    left_comm.into(r, tag + "zak-U.(V.f)=exp(tau*alpha_n(theta))V.(U.f)");
    right_comm.into(r, tag + "zak-(f.U).V=exp(tau*theta)(f.V).U");
    left_star.into(r, tag + "zak-left-action=star");
    right_star.into(r, tag + "zak-right-action=star");
  }
  {
    const ZakElement zf = zak_transform(random_heis(++draw, 1, k));
    r.add("zak-empty-word", (zak_act_left("", zf, hb) - zf).term_count() + (zak_act_right(zf, "", hb) - zf).term_count());
  }

  // pairing
  Tally pair_star;
  Tally balanced;
  Tally bimodule_left;
  Tally bimodule_right;
  Tally classical;
  for (const auto& [n, p] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, -1}, {-1, 3}}) {
    for (const Scalar& th : thetas) {
      const HeisElement f1 = random_heis(++draw, n, k);
      const HeisElement f2 = random_heis(++draw, p, k);
      const ZakElement z1 = zak_transform(f1);
      const ZakElement z2 = zak_transform(f2);
      const std::string label = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      pair_star.record((zak_pair(z1, z2, th) - zak_transform(star(f1, f2, th))).term_count(), label);
      const Scalar zero = Scalar(0).at_order(k);
      classical.record((zak_pair(z1, z2, zero) - zak_transform(f1.pointwise(f2))).term_count(), label);
      if (n != 1 || p != 1) continue;
      // f₂ is a bimodule over (A₀^θ, A₀^{α_{-p}(θ)}); so is f₁∗f₂ over (A₀^{α_n(θ)}, A₀^{α_{-p}(θ)})
      const Scalar right_param = alpha(th, -p);
      for (const std::string word : {"U", "V", "UV", "vU"}) {
        balanced.record((zak_pair(zak_act_right(z1, word, th), z2, th) -
                         zak_pair(z1, zak_act_left(word, z2, right_param), th))
                            .term_count(),
                        word);
        bimodule_left.record((zak_act_left(word, zak_pair(z1, z2, th), right_param) -
                              zak_pair(zak_act_left(word, z1, th), z2, th))
                                 .term_count(),
                             word);
        bimodule_right.record((zak_act_right(zak_pair(z1, z2, th), word, right_param) -
                               zak_pair(z1, zak_act_right(z2, word, right_param), th))
                                  .term_count(),
                              word);
      }
    }
  }
  pair_star.into(r, "pair=zak(star)");
  classical.into(r, "pair-theta=0-classical");
  balanced.into(r, "pair-balanced");
  bimodule_left.into(r, "pair-left-bimodule");
  bimodule_right.into(r, "pair-right-bimodule");
  return r;
}

}  // namespace hopfq
