#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfq/error.hpp"
#include "hopfq/linalg.hpp"
#include "hopfq/series.hpp"

namespace hopfq {

inline constexpr int kMaxArity = 6;
using MultiKey = std::array<std::uint32_t, kMaxArity>;

/// Sparse element of H^{⊗n} over a host Hopf algebra (FiniteHost or PbwHost),
/// with the leg calculus of Hopf cochains: leg insertion h_{i1...im},
/// coproduct on a leg h_{..(k k+1)..}, counit on a leg, and products and
/// inverses in the tensor-power algebra. Legs are numbered from 1.
template <class Host>
class LegTensor {
 public:
  using Key = typename Host::Key;
  using Entry = std::pair<MultiKey, Scalar>;
  using Entries = std::vector<Entry>;

  LegTensor(const Host& host, int arity) : host_(&host), arity_(arity) {
    if (arity < 0 || arity > kMaxArity) raise(ErrorKind::ArityMismatch, "arity out of range");
  }

  static LegTensor one(const Host& host, int arity) {
    LegTensor out(host, 0);
    out.entries_.emplace_back(MultiKey{}, Scalar(1));
    return out.leg_embed({}, arity);
  }

  static LegTensor basis(const Host& host, std::initializer_list<Key> keys, Scalar c = Scalar(1)) {
    LegTensor out(host, static_cast<int>(keys.size()));
    MultiKey k{};
    int i = 0;
    for (Key key : keys) k[i++] = key;
    if (!c.is_zero()) out.entries_.emplace_back(k, std::move(c));
    return out;
  }

  static LegTensor from_entries(const Host& host, int arity, Entries entries) {
    LegTensor out(host, arity);
    out.entries_ = normalize(std::move(entries));
    return out;
  }

  /// Arity-1 tensor from a host element.
  static LegTensor from_element(const Host& host, const SparseVec& v) {
    Entries e;
    for (const auto& [k, c] : v) e.emplace_back(MultiKey{k}, c);
    return from_entries(host, 1, std::move(e));
  }

  /// Δ^{(n)}(a) in H^{⊗n} (n ≥ 1).
  static LegTensor iterated_coproduct(const Host& host, Key a, int n) {
    LegTensor out = basis(host, {a});
    for (int k = 1; k < n; ++k) out = out.coproduct_leg(k);
    return out;
  }

  const Host& host() const noexcept { return *host_; }
  int arity() const noexcept { return arity_; }
  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  Scalar coeff(const MultiKey& k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, const MultiKey& key) { return e.first < key; });
    if (it != entries_.end() && it->first == k) return it->second;
    return Scalar();
  }

  LegTensor operator-() const {
    LegTensor out = *this;
    for (auto& e : out.entries_) e.second = -e.second;
    return out;
  }

  LegTensor operator+(const LegTensor& o) const {
    check_compatible(o);
    LegTensor out(*host_, arity_);
    out.entries_.reserve(entries_.size() + o.entries_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < entries_.size() || j < o.entries_.size()) {
      if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
        out.entries_.push_back(entries_[i++]);
      } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
        out.entries_.push_back(o.entries_[j++]);
      } else {
        Scalar s = entries_[i].second + o.entries_[j].second;
        if (!s.is_zero()) out.entries_.emplace_back(entries_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  LegTensor operator-(const LegTensor& o) const { return *this + (-o); }

  LegTensor scaled(const Scalar& c) const {
    LegTensor out(*host_, arity_);
    for (const auto& [k, v] : entries_) {
      Scalar p = v * c;
      if (!p.is_zero()) out.entries_.emplace_back(k, std::move(p));
    }
    return out;
  }

  bool operator==(const LegTensor& o) const { return arity_ == o.arity_ && entries_ == o.entries_; }

  /// Number of nonzero terms of this - o.
  std::size_t residual_terms(const LegTensor& o) const { return (*this - o).size(); }

  LegTensor operator*(const LegTensor& o) const {
    check_compatible(o);
    LegTensor out(*host_, arity_);
    if (entries_.empty() || o.entries_.empty()) return out;
    if (host_->diagonal()) {
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < entries_.size() && j < o.entries_.size()) {
        if (entries_[i].first < o.entries_[j].first) {
          ++i;
        } else if (o.entries_[j].first < entries_[i].first) {
          ++j;
        } else {
          Scalar p = entries_[i].second * o.entries_[j].second;
          if (!p.is_zero()) out.entries_.emplace_back(entries_[i].first, std::move(p));
          ++i;
          ++j;
        }
      }
      return out;
    }
    Accumulator acc;
    if (host_->grouplike()) {
      for (const auto& [ka, ca] : entries_) {
        for (const auto& [kb, cb] : o.entries_) {
          MultiKey k{};
          for (int l = 0; l < arity_; ++l) k[l] = host_->multiply(ka[l], kb[l])[0].first;
          acc.add(k, ca * cb);
        }
      }
      out.entries_ = acc.take();
      return out;
    }
    std::array<const SparseVec*, kMaxArity> legs{};
    std::array<std::size_t, kMaxArity> idx{};
    for (const auto& [ka, ca] : entries_) {
      for (const auto& [kb, cb] : o.entries_) {
        Scalar c = ca * cb;
        if (c.is_zero()) continue;
        bool empty = false;
        for (int l = 0; l < arity_; ++l) {
          legs[l] = &host_->multiply(ka[l], kb[l]);
          if (legs[l]->empty()) empty = true;
        }
        if (empty) continue;
        expand(legs, idx, c, acc);
      }
    }
    out.entries_ = acc.take();
    return out;
  }

  LegTensor& operator*=(const LegTensor& o) { return *this = *this * o; }

  /// h_{i1...im}: the legs of h go to the given (1-based, strictly
  /// increasing) positions of an arity-n tensor; other legs hold 1.
  LegTensor leg_embed(const std::vector<int>& positions, int n) const {
    if (static_cast<int>(positions.size()) != arity_ || n > kMaxArity || n < arity_) {
      raise(ErrorKind::BadPositions, "positions do not match arity");
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] < 1 || positions[i] > n || (i > 0 && positions[i] <= positions[i - 1])) {
        raise(ErrorKind::BadPositions, "positions must be strictly increasing within 1..n");
      }
    }
    LegTensor out(*host_, n);
    const SparseVec& unit = host_->unit();
    std::array<int, kMaxArity> src{};
    src.fill(-1);
    for (std::size_t i = 0; i < positions.size(); ++i) src[positions[i] - 1] = static_cast<int>(i);
    std::array<const SparseVec*, kMaxArity> legs{};
    std::array<SparseVec, kMaxArity> single;
    std::array<std::size_t, kMaxArity> idx{};
    Entries acc;
    for (const auto& [k, c] : entries_) {
      for (int l = 0; l < n; ++l) {
        if (src[l] >= 0) {
          single[l] = SparseVec{{k[src[l]], Scalar(1)}};
          legs[l] = &single[l];
        } else {
          legs[l] = &unit;
        }
      }
      expand(legs, idx, c, acc, n);
    }
    out.entries_ = normalize(std::move(acc));
    return out;
  }

  /// Δ applied to the given leg, which splits into legs (leg, leg+1).
  LegTensor coproduct_leg(int leg) const {
    if (leg < 1 || leg > arity_) raise(ErrorKind::BadLeg, "leg " + std::to_string(leg) + " out of range");
    if (arity_ + 1 > kMaxArity) raise(ErrorKind::ArityMismatch, "arity limit exceeded");
    LegTensor out(*host_, arity_ + 1);
    Entries acc;
    const int p = leg - 1;
    for (const auto& [k, c] : entries_) {
      for (const auto& t : host_->coproduct(k[p])) {
        MultiKey nk{};
        for (int l = 0; l < p; ++l) nk[l] = k[l];
        nk[p] = t.left;
        nk[p + 1] = t.right;
        for (int l = p + 1; l < arity_; ++l) nk[l + 1] = k[l];
        Scalar v = c * t.coeff;
        if (!v.is_zero()) acc.emplace_back(nk, std::move(v));
      }
    }
    out.entries_ = normalize(std::move(acc));
    return out;
  }

  /// ε applied to the given leg, which is removed.
  LegTensor counit_leg(int leg) const {
    if (leg < 1 || leg > arity_) raise(ErrorKind::BadLeg, "leg " + std::to_string(leg) + " out of range");
    LegTensor out(*host_, arity_ - 1);
    Entries acc;
    const int p = leg - 1;
    for (const auto& [k, c] : entries_) {
      const Scalar& e = host_->counit(k[p]);
      if (e.is_zero()) continue;
      MultiKey nk{};
      for (int l = 0, m = 0; l < arity_; ++l) {
        if (l != p) nk[m++] = k[l];
      }
      acc.emplace_back(nk, c * e);
    }
    out.entries_ = normalize(std::move(acc));
    return out;
  }

  /// Face map Δ_i: i = 0 gives 1⊗h, i = n+1 gives h⊗1, otherwise coproduct_leg(i).
  LegTensor face(int i) const {
    if (i < 0 || i > arity_ + 1) raise(ErrorKind::BadLeg, "face index out of range");
    std::vector<int> pos(arity_);
    if (i == 0) {
      for (int l = 0; l < arity_; ++l) pos[l] = l + 2;
      return leg_embed(pos, arity_ + 1);
    }
    if (i == arity_ + 1) {
      for (int l = 0; l < arity_; ++l) pos[l] = l + 1;
      return leg_embed(pos, arity_ + 1);
    }
    return coproduct_leg(i);
  }

  /// Applies a linear map (Key -> host element) to one leg.
  template <class F>
  LegTensor map_leg(int leg, F&& f) const {
    if (leg < 1 || leg > arity_) raise(ErrorKind::BadLeg, "leg out of range");
    LegTensor out(*host_, arity_);
    Entries acc;
    for (const auto& [k, c] : entries_) {
      for (const auto& [nk_leg, v] : f(k[leg - 1])) {
        MultiKey nk = k;
        nk[leg - 1] = nk_leg;
        acc.emplace_back(nk, c * v);
      }
    }
    out.entries_ = normalize(std::move(acc));
    return out;
  }

  /// x ⊗ y
  LegTensor tensor(const LegTensor& o) const {
    if (host_ != o.host_) raise(ErrorKind::HostMismatch, "tensor factors over different hosts");
    if (arity_ + o.arity_ > kMaxArity) raise(ErrorKind::ArityMismatch, "arity limit exceeded");
    LegTensor out(*host_, arity_ + o.arity_);
    Entries acc;
    for (const auto& [ka, ca] : entries_) {
      for (const auto& [kb, cb] : o.entries_) {
        MultiKey k = ka;
        for (int l = 0; l < o.arity_; ++l) k[arity_ + l] = kb[l];
        acc.emplace_back(k, ca * cb);
      }
    }
    out.entries_ = normalize(std::move(acc));
    return out;
  }

  /// Two-sided inverse, or nullopt when the element is not invertible.
  std::optional<LegTensor> try_invert() const {
    const LegTensor unit = one(*host_, arity_);
    if (entries_.empty()) return std::nullopt;
    try {
      if (host_->grouplike() && entries_.size() == 1) {
        MultiKey k{};
        for (int l = 0; l < arity_; ++l) k[l] = host_->inverse_key(entries_[0].first[l]);
        LegTensor out(*host_, arity_);
        out.entries_.emplace_back(k, series_invert(entries_[0].second));
        return out;
      }
      if (host_->diagonal()) {
        if (entries_.size() != unit.size()) return std::nullopt;
        LegTensor out(*host_, arity_);
        for (const auto& [k, c] : entries_) out.entries_.emplace_back(k, series_invert(c));
        return out;
      }
      std::optional<LegTensor> y0 = invert_order_zero(unit);
      if (!y0) return std::nullopt;
      LegTensor r = unit - *this * *y0;
      LegTensor y = *y0;
      if (!r.is_zero()) {
        // x y0 = 1 - r with r hbar-nilpotent: x^{-1} = y0 (1 + r + r^2 + ...)
        LegTensor sum = unit;
        LegTensor power = unit;
        for (int k = 0; k <= max_order() && !power.is_zero(); ++k) {
          power = power * r;
          sum = sum + power;
        }
        y = *y0 * sum;
      }
      if (!(*this * y == unit) || !(y * *this == unit)) return std::nullopt;
      return y;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonUnit || e.kind() == ErrorKind::NotInvertible) return std::nullopt;
      throw;
    }
  }

  LegTensor invert() const {
    auto inv = try_invert();
    if (!inv) raise(ErrorKind::NotInvertible, "element of H^⊗" + std::to_string(arity_) + " is not invertible");
    return *inv;
  }

  /// Largest truncation order among the coefficients (0 if none carry one).
  int max_order() const {
    int k = 0;
    for (const auto& [key, c] : entries_) k = std::max(k, c.order());
    return k;
  }

  std::string key_label(const MultiKey& k) const {
    std::string out;
    for (int l = 0; l < arity_; ++l) out += (l ? "⊗" : "") + host_->label(k[l]);
    return arity_ == 0 ? "1" : out;
  }

  std::string str(std::size_t max_terms = 8) const {
    if (entries_.empty()) return "0";
    std::string out;
    std::size_t n = 0;
    for (const auto& [k, c] : entries_) {
      if (n == max_terms) {
        out += " + ... (" + std::to_string(entries_.size()) + " terms)";
        break;
      }
      if (n++) out += " + ";
      out += "(" + c.str() + ")*" + key_label(k);
    }
    return out;
  }

 private:
  void check_compatible(const LegTensor& o) const {
    if (host_ != o.host_) raise(ErrorKind::HostMismatch, "tensors over different hosts");
    if (arity_ != o.arity_) {
      raise(ErrorKind::ArityMismatch,
            "arity " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
    }
  }

  struct KeyHash {
    std::size_t operator()(const MultiKey& k) const noexcept {
      std::size_t h = 0;
      for (auto v : k) h = h * 1000003u ^ v;
      return h;
    }
  };

  // Sums coefficients per key as they arrive.
  class Accumulator {
   public:
    void emplace_back(const MultiKey& k, Scalar v) {
      auto [it, fresh] = map_.try_emplace(k, std::move(v));
      if (!fresh) it->second += v;
    }
    void add(const MultiKey& k, Scalar v) { emplace_back(k, std::move(v)); }
    Entries take() {
      Entries out;
      out.reserve(map_.size());
      for (auto& [k, v] : map_) {
        if (!v.is_zero()) out.emplace_back(k, std::move(v));
      }
      map_.clear();
      std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
      return out;
    }

   private:
    std::unordered_map<MultiKey, Scalar, KeyHash> map_;
  };

  // Cartesian expansion of per-leg host elements.
  template <class Sink>
  void expand(const std::array<const SparseVec*, kMaxArity>& legs, std::array<std::size_t, kMaxArity>& idx,
              const Scalar& c, Sink& acc, int n = -1) const {
    if (n < 0) n = arity_;
    for (int l = 0; l < n; ++l) {
      if (legs[l]->empty()) return;
      idx[l] = 0;
    }
    for (;;) {
      MultiKey k{};
      Scalar v = c;
      for (int l = 0; l < n; ++l) {
        const auto& e = (*legs[l])[idx[l]];
        k[l] = e.first;
        if (!e.second.is_one()) v = v * e.second;
      }
      if (!v.is_zero()) acc.emplace_back(k, std::move(v));
      int l = n - 1;
      while (l >= 0) {
        if (++idx[l] < legs[l]->size()) break;
        idx[l] = 0;
        --l;
      }
      if (l < 0) return;
    }
  }

  static Entries normalize(Entries acc) {
    std::sort(acc.begin(), acc.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Entries out;
    out.reserve(acc.size());
    for (auto& e : acc) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second += e.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(e));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    return out;
  }

  // Inverse of the hbar-degree-0 part.
  std::optional<LegTensor> invert_order_zero(const LegTensor& unit) const {
    LegTensor x0(*host_, arity_);
    for (const auto& [k, c] : entries_) {
      const TauLaurent c0 = c.coeff(0);
      if (!c0.is_zero()) x0.entries_.emplace_back(k, Scalar(c0));
    }
    if (x0.is_zero()) return std::nullopt;
    // scalar multiple of the unit
    if (x0.size() == unit.size()) {
      const Scalar ratio = x0.entries_[0].second / unit.entries_[0].second;
      if (x0 == unit.scaled(ratio)) return unit.scaled(series_invert(ratio));
    }
    if (!host_->finite()) return std::nullopt;
    // Solve x0 * y = 1 through the left regular representation.
    const auto d = static_cast<std::uint32_t>(host_->dim());
    std::uint64_t total = 1;
    for (int l = 0; l < arity_; ++l) total *= d;
    if (total > (1u << 16)) raise(ErrorKind::NotInvertible, "regular representation too large");
    auto flat = [&](const MultiKey& k) {
      std::uint32_t f = 0;
      for (int l = 0; l < arity_; ++l) f = f * d + k[l];
      return f;
    };
    RowEchelon ech;
    for (std::uint32_t t = 0; t < total; ++t) {
      MultiKey k{};
      std::uint32_t u = t;
      for (int l = arity_ - 1; l >= 0; --l) {
        k[l] = u % d;
        u /= d;
      }
      LegTensor e(*host_, arity_);
      e.entries_.emplace_back(k, Scalar(1));
      const LegTensor col = x0 * e;
      SparseVec v;
      for (const auto& [ck, cv] : col.entries_) v.emplace_back(flat(ck), cv);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.insert(v, t);
    }
    SparseVec target;
    for (const auto& [k, c] : unit.entries_) target.emplace_back(flat(k), c);
    std::sort(target.begin(), target.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto combo = ech.solve(target);
    if (!combo) return std::nullopt;
    Entries ye;
    for (const auto& [t, c] : *combo) {
      MultiKey k{};
      std::uint32_t u = t;
      for (int l = arity_ - 1; l >= 0; --l) {
        k[l] = u % d;
        u /= d;
      }
      ye.emplace_back(k, c);
    }
    return from_entries(*host_, arity_, std::move(ye));
  }

  const Host* host_;
  int arity_;
  Entries entries_;
};

}  // namespace hopfq
