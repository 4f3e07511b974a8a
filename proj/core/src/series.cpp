#include "hopfq/series.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "hopfq/error.hpp"

namespace hopfq {

int common_order(int a, int b) {
  if (a == Series::kFree) return b;
  if (b == Series::kFree || a == b) return a;
  raise(ErrorKind::OrderMismatch,
        "series truncation orders differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

Series::Series(TauLaurent c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Series Series::hbar(int k) { return monomial(1, TauLaurent(1), k); }

Series Series::tau(int e) { return Series(TauLaurent::monomial(e, Cyclotomic(1))); }

Series Series::monomial(int d, TauLaurent c, int k) {
  if (k < 0) raise(ErrorKind::OrderMismatch, "truncation order must be nonnegative");
  Series out;
  out.order_ = k;
  if (d <= k && !c.is_zero()) {
    out.coeffs_.resize(d + 1);
    out.coeffs_[d] = std::move(c);
  }
  return out;
}

Series Series::from_coeffs(int k, std::vector<TauLaurent> coeffs) {
  if (k < 0) raise(ErrorKind::OrderMismatch, "truncation order must be nonnegative");
  Series out;
  out.order_ = k;
  const std::size_t n = std::min<std::size_t>(coeffs.size(), static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < n; ++i) out.coeffs_.push_back(std::move(coeffs[i]));
  out.trim();
  return out;
}

void Series::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TauLaurent Series::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return TauLaurent();
  return coeffs_[d];
}

int Series::valuation() const noexcept {
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (!coeffs_[d].is_zero()) return static_cast<int>(d);
  }
  return -1;
}

Series Series::at_order(int k) const {
  if (k == kFree) {
    if (coeffs_.size() > 1) raise(ErrorKind::OrderMismatch, "series depends on hbar");
    Series out = *this;
    out.order_ = kFree;
    return out;
  }
  if (order_ != kFree && k > order_) {
    raise(ErrorKind::OrderMismatch, "cannot raise truncation order " + std::to_string(order_) + " to " +
                                        std::to_string(k));
  }
  Series out = *this;
  out.order_ = k;
  if (static_cast<int>(out.coeffs_.size()) > k + 1) out.coeffs_.resize(k + 1);
  out.trim();
  return out;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Series operator+(const Series& a, const Series& b) {
  Series out = a;
  out += b;
  return out;
}

Series& Series::operator+=(const Series& b) {
  order_ = common_order(order_, b.order_);
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
  for (std::size_t d = 0; d < b.coeffs_.size(); ++d) {
    if (!b.coeffs_[d].is_zero()) coeffs_[d] += b.coeffs_[d];
  }
  trim();
  return *this;
}

Series operator-(const Series& a, const Series& b) {
  Series out = a;
  out += -b;
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out;
  out.order_ = common_order(a.order_, b.order_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
  if (a.coeffs_.size() == 1 && b.coeffs_.size() == 1) {
    TauLaurent p = a.coeffs_[0] * b.coeffs_[0];
    if (!p.is_zero()) out.coeffs_.push_back(std::move(p));
    return out;
  }
  const int top = std::min<int>(static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 2,
                                out.order_ == Series::kFree ? 0 : out.order_);
  out.coeffs_.resize(top + 1);
  for (std::size_t i = 0; i < a.coeffs_.size() && static_cast<int>(i) <= top; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) <= top; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

Series operator/(const Series& a, const Series& b) { return a * series_invert(b); }

Series Series::pow(long long e) const {
  if (e < 0) return series_invert(*this).pow(-e);
  Series result = Series(1).at_order(order_ == kFree ? kFree : order_);
  Series base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Series series_invert(const Series& s) {
  if (s.is_zero() || !s.coeffs()[0].is_unit()) {
    raise(ErrorKind::NonUnit, "constant term of series is not invertible");
  }
  const TauLaurent b0 = s.coeffs()[0].inverse();
  if (s.coeffs().size() == 1) return Series(b0).at_order(s.order());
  const int k = s.order();
  std::vector<TauLaurent> b(k + 1);
  b[0] = b0;
  for (int n = 1; n <= k; ++n) {
    TauLaurent acc;
    for (int j = 1; j <= n; ++j) {
      const TauLaurent aj = s.coeff(j);
      if (aj.is_zero() || b[n - j].is_zero()) continue;
      acc += aj * b[n - j];
    }
    b[n] = -(b0 * acc);
  }
  return Series::from_coeffs(k, std::move(b));
}

Series series_exp(const Series& s) {
  if (!s.coeff(0).is_zero()) raise(ErrorKind::NonNilpotent, "exp requires zero constant term");
  if (s.is_zero()) return Series(1).at_order(s.order());
  const int k = s.order();
  // n b_n = sum_j j a_j b_{n-j}
  std::vector<TauLaurent> b(k + 1);
  b[0] = TauLaurent(1);
  for (int n = 1; n <= k; ++n) {
    TauLaurent acc;
    for (int j = 1; j <= n; ++j) {
      const TauLaurent aj = s.coeff(j);
      if (aj.is_zero() || b[n - j].is_zero()) continue;
      acc += TauLaurent(Rational(j)) * aj * b[n - j];
    }
    b[n] = TauLaurent(Rational(1, n)) * acc;
  }
  return Series::from_coeffs(k, std::move(b));
}

std::complex<double> numeric_eval(const Series& s, const Rational& hbar_value) {
  const double h = hbar_value.to_double();
  std::complex<double> out = 0.0;
  double hp = 1.0;
  for (const auto& c : s.coeffs()) {
    out += c.to_complex() * hp;
    hp *= h;
  }
  return out;
}

std::string numeric_eval_string(const Series& s, const Rational& hbar_value, int digits) {
  const std::complex<double> v = numeric_eval(s, hbar_value);
  std::ostringstream os;
  os.precision(digits);
  os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
  return os.str();
}

namespace {

std::string power(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

std::string Series::str() const {
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    for (const auto& [e, c] : coeffs_[d].terms()) {
      for (std::size_t k = 0; k < c.coords().size(); ++k) {
        const Rational& r = c.coords()[k];
        if (r.is_zero()) continue;
        std::vector<std::string> factors;
        if (k > 0) factors.push_back("z(" + std::to_string(c.conductor()) + "," + std::to_string(k) + ")");
        if (e != 0) factors.push_back(power("tau", e));
        if (d != 0) factors.push_back(power("h", static_cast<int>(d)));
        const bool neg = r.sign() < 0;
        const Rational mag = neg ? -r : r;
        std::string term;
        if (!mag.is_one() || factors.empty()) term = mag.str();
        for (const auto& f : factors) term += (term.empty() ? "" : "*") + f;
        if (out.empty()) {
          out = (neg ? "-" : "") + term;
        } else {
          out += (neg ? " - " : " + ") + term;
        }
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hopfq
