#include "hopfq/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <vector>

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

// Reduced coordinates of zeta^e for every e in [0, n).
struct PowerTable {
  int n = 1;
  int phi = 1;
  std::vector<std::vector<std::pair<int, long long>>> power;
};

std::shared_ptr<const PowerTable> build_table(int n) {
  auto table = std::make_shared<PowerTable>();
  table->n = n;
  const std::vector<long long> poly = cyclotomic_polynomial(n);
  const int phi = static_cast<int>(poly.size()) - 1;
  table->phi = phi;
  table->power.resize(n);
  std::vector<long long> cur(phi, 0);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    auto& row = table->power[e];
    for (int i = 0; i < phi; ++i) {
      if (cur[i] != 0) row.emplace_back(i, cur[i]);
    }
    // multiply by zeta and reduce zeta^phi = -sum poly[i] zeta^i
    long long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) cur[i] -= top * poly[i];
    }
  }
  return table;
}

const PowerTable& power_table(int n) {
  thread_local std::map<int, std::shared_ptr<const PowerTable>> local;
  auto it = local.find(n);
  if (it != local.end()) return *it->second;
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PowerTable>> shared;
  std::shared_ptr<const PowerTable> table;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = shared[n];
    if (!slot) slot = build_table(n);
    table = slot;
  }
  return *local.emplace(n, table).first->second;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n < 1) raise(ErrorKind::NotPrimitiveRoot, "conductor must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long long> den = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(den.size()) - 1;
    const int nd = static_cast<int>(num.size()) - 1;
    std::vector<long long> quot(nd - dd + 1, 0);
    for (int i = nd; i >= dd; --i) {
      long long c = num[i];  // den is monic
      quot[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

Cyclotomic::Cyclotomic(Rational value) {
  if (!value.is_zero()) coords_.push_back(std::move(value));
}

Cyclotomic Cyclotomic::root_of_unity(long long p, long long q) {
  if (q < 1) raise(ErrorKind::NotPrimitiveRoot, "root_of_unity requires q >= 1");
  long long k = ((p % q) + q) % q;
  if (k == 0) return Cyclotomic(Rational(1));
  const auto& table = power_table(static_cast<int>(q));
  Cyclotomic out;
  out.conductor_ = static_cast<int>(q);
  out.coords_.assign(table.phi, Rational());
  for (const auto& [i, c] : table.power[k]) out.coords_[i] = Rational(c);
  out.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::from_coords(int conductor, Coords coords) {
  if (conductor < 1) raise(ErrorKind::NotPrimitiveRoot, "conductor must be positive");
  const int phi = euler_phi(conductor);
  if (static_cast<int>(coords.size()) > phi) {
    raise(ErrorKind::SchemaError, "too many coordinates for conductor " + std::to_string(conductor));
  }
  Cyclotomic out;
  out.conductor_ = conductor;
  out.coords_ = std::move(coords);
  out.coords_.resize(phi);
  out.canonicalize();
  return out;
}

void Cyclotomic::canonicalize() {
  bool all_zero = true;
  bool rational = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) {
      all_zero = false;
      if (i > 0) rational = false;
    }
  }
  if (all_zero) {
    conductor_ = 1;
    coords_.clear();
    return;
  }
  if (rational && conductor_ != 1) {
    Rational r = std::move(coords_[0]);
    coords_.clear();
    coords_.push_back(std::move(r));
    conductor_ = 1;
  }
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coords_.empty() ? Rational() : coords_[0];
}

Cyclotomic Cyclotomic::embed(int l) const {
  if (l % conductor_ != 0) raise(ErrorKind::NotPrimitiveRoot, "embedding conductor must be a multiple");
  if (l == conductor_ || conductor_ == 1) return *this;
  const auto& table = power_table(l);
  const int step = l / conductor_;
  Cyclotomic out;
  out.conductor_ = l;
  out.coords_.assign(table.phi, Rational());
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].is_zero()) continue;
    for (const auto& [i, c] : table.power[static_cast<int>(k) * step]) {
      out.coords_[i] += coords_[k] * Rational(c);
    }
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

namespace {

int common_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.conductor_ == 1 && b.conductor_ == 1) return Cyclotomic(a.coords_[0] + b.coords_[0]);
  const int l = common_conductor(a.conductor_, b.conductor_);
  Cyclotomic x = a.conductor_ == l ? a : a.embed(l);
  const Cyclotomic y = b.conductor_ == l ? b : b.embed(l);
  if (x.conductor_ == 1) {
    // a was rational and l == b's conductor
    Cyclotomic out = y;
    out.coords_[0] += x.coords_[0];
    out.canonicalize();
    return out;
  }
  if (y.conductor_ == 1) {
    x.coords_[0] += y.coords_[0];
    x.canonicalize();
    return x;
  }
  for (std::size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
  x.canonicalize();
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  if (a.conductor_ == 1) {
    if (a.coords_[0].is_one()) return b;
    Cyclotomic out = b;
    for (auto& c : out.coords_) c = a.coords_[0] * c;
    return out;
  }
  if (b.conductor_ == 1) {
    if (b.coords_[0].is_one()) return a;
    Cyclotomic out = a;
    for (auto& c : out.coords_) c = c * b.coords_[0];
    return out;
  }
  const int l = common_conductor(a.conductor_, b.conductor_);
  const Cyclotomic x = a.conductor_ == l ? a : a.embed(l);
  const Cyclotomic y = b.conductor_ == l ? b : b.embed(l);
  const auto& table = power_table(l);
  std::vector<Rational> prod(2 * table.phi, Rational());
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (x.coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.coords_.size(); ++j) {
      if (y.coords_[j].is_zero()) continue;
      prod[i + j] += x.coords_[i] * y.coords_[j];
    }
  }
  Cyclotomic out;
  out.conductor_ = l;
  out.coords_.assign(table.phi, Rational());
  for (std::size_t s = 0; s < prod.size(); ++s) {
    if (prod[s].is_zero()) continue;
    if (static_cast<int>(s) < table.phi) {
      out.coords_[s] += prod[s];
      continue;
    }
    for (const auto& [i, c] : table.power[static_cast<int>(s) % l]) out.coords_[i] += prod[s] * Rational(c);
  }
  out.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero cyclotomic");
  if (conductor_ == 1) return Cyclotomic(coords_[0].inverse());
  // Solve x * y = 1 with the multiplication-by-x matrix in the power basis.
  const int phi = static_cast<int>(coords_.size());
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    Cyclotomic col = *this * Cyclotomic::root_of_unity(j, conductor_).embed(conductor_);
    Cyclotomic aligned = col.embed(conductor_);
    if (aligned.conductor_ == 1) {
      m[0][j] = aligned.is_zero() ? Rational() : aligned.coords_[0];
    } else {
      for (int i = 0; i < phi; ++i) m[i][j] = aligned.coords_[i];
    }
  }
  m[0][phi] = Rational(1);
  for (int col = 0; col < phi; ++col) {
    int piv = -1;
    for (int r = col; r < phi; ++r) {
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) raise(ErrorKind::DivisionByZero, "singular cyclotomic multiplication matrix");
    std::swap(m[piv], m[col]);
    Rational inv = m[col][col].inverse();
    for (int k = col; k <= phi; ++k) m[col][k] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int k = col; k <= phi; ++k) m[r][k] -= f * m[col][k];
    }
  }
  Cyclotomic out;
  out.conductor_ = conductor_;
  out.coords_.resize(phi);
  for (int i = 0; i < phi; ++i) out.coords_[i] = m[i][phi];
  out.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(Rational(1));
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    // canonical form puts every rational value at conductor 1
    return false;
  }
  const int l = common_conductor(a.conductor_, b.conductor_);
  return a.embed(l).coords_ == b.embed(l).coords_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> out = 0.0;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
    out += coords_[k].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return out;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
    } else {
      const std::string root = "z(" + std::to_string(conductor_) + "," + std::to_string(k) + ")";
      out += mag.is_one() ? root : mag.str() + "*" + root;
    }
  }
  return out;
}

}  // namespace hopfq
