#include "hopfq/group.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "hopfq/error.hpp"

namespace hopfq {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<std::vector<Elem>> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) raise(ErrorKind::InvalidGroup, name_ + ": empty group");
  if (table_.size() != n) raise(ErrorKind::InvalidGroup, name_ + ": table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) raise(ErrorKind::InvalidGroup, name_ + ": table row has wrong length");
    std::vector<bool> seen(n, false);
    for (Elem x : row) {
      if (x >= n || seen[x]) raise(ErrorKind::InvalidGroup, name_ + ": rows must be permutations");
      seen[x] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table_[i][j]]) raise(ErrorKind::InvalidGroup, name_ + ": columns must be permutations");
      seen[table_[i][j]] = true;
    }
  }
  bool found = false;
  for (Elem e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) raise(ErrorKind::InvalidGroup, name_ + ": no identity");
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (table_[a][b] != table_[b][a]) abelian_ = false;
      for (Elem c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          raise(ErrorKind::InvalidGroup, name_ + ": not associative at (" + labels_[a] + "," + labels_[b] + "," +
                                             labels_[c] + ")");
        }
      }
    }
  }
  inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) inverse_[a] = b;
    }
    if (table_[inverse_[a]][a] != identity_) raise(ErrorKind::InvalidGroup, name_ + ": inverse not two-sided");
  }
}

FiniteGroup::Elem FiniteGroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) raise(ErrorKind::SchemaError, name_ + ": no element '" + label + "'");
  return static_cast<Elem>(it - labels_.begin());
}

std::vector<FiniteGroup::Elem> FiniteGroup::center() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < order() && central; ++b) central = table_[a][b] == table_[b][a];
    if (central) out.push_back(a);
  }
  return out;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) raise(ErrorKind::InvalidGroup, "cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<FiniteGroup::Elem>> table(n, std::vector<FiniteGroup::Elem>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (int j = 0; j < n; ++j) table[i][j] = static_cast<FiniteGroup::Elem>((i + j) % n);
  }
  return FiniteGroup("Z" + std::to_string(n), labels, table);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order();
  const std::size_t m = h.order();
  std::vector<std::string> labels;
  std::vector<std::vector<FiniteGroup::Elem>> table(n * m, std::vector<FiniteGroup::Elem>(n * m));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < m; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  }
  for (std::size_t x = 0; x < n * m; ++x) {
    for (std::size_t y = 0; y < n * m; ++y) {
      const auto a = g.mul(static_cast<FiniteGroup::Elem>(x / m), static_cast<FiniteGroup::Elem>(y / m));
      const auto b = h.mul(static_cast<FiniteGroup::Elem>(x % m), static_cast<FiniteGroup::Elem>(y % m));
      table[x][y] = static_cast<FiniteGroup::Elem>(a * m + b);
    }
  }
  return FiniteGroup(g.name() + "x" + h.name(), labels, table);
}

namespace {

template <std::size_t K>
FiniteGroup sign_group(const std::string& name, const std::vector<std::string>& labels,
                       const std::vector<std::array<int, K>>& signs) {
  // a sign tuple is the bitmask of its -1 entries; products xor the masks
  auto mask = [](const std::array<int, K>& s) {
    unsigned m = 0;
    for (std::size_t k = 0; k < K; ++k) m |= (s[k] < 0 ? 1u : 0u) << k;
    return m;
  };
  const std::size_t n = signs.size();
  std::vector<FiniteGroup::Elem> by_mask(std::size_t{1} << K, 0);
  for (std::size_t a = 0; a < n; ++a) by_mask[mask(signs[a])] = static_cast<FiniteGroup::Elem>(a);
  std::vector<std::vector<FiniteGroup::Elem>> table(n, std::vector<FiniteGroup::Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = by_mask[mask(signs[a]) ^ mask(signs[b])];
  }
  return FiniteGroup(name, labels, table);
}

}  // namespace

FiniteGroup z2_cubed() {
  const std::vector<std::array<int, 3>> signs = {
      {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {-1, -1, -1}, {1, -1, -1}, {-1, 1, -1}, {1, 1, -1},
  };
  return sign_group<3>("Z2^3", {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}, signs);
}

FiniteGroup klein_four() {
  const std::vector<std::array<int, 2>> signs = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  return sign_group<2>("Z2^2", {"1", "a", "b", "ab"}, signs);
}

FiniteGroup symmetric_group_s3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<FiniteGroup::Elem>> table(6, std::vector<FiniteGroup::Elem>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      Perm p{};
      for (int i = 0; i < 3; ++i) p[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      table[a][b] = static_cast<FiniteGroup::Elem>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  }
  return FiniteGroup("S3", labels, table);
}

FiniteGroup dihedral_group_d4() {
  // r^i s^j with s r = r^{-1} s
  std::vector<std::string> labels;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 4; ++i) {
      std::string l = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      if (j == 1) l += "s";
      labels.push_back(l.empty() ? "e" : l);
    }
  }
  std::vector<std::vector<FiniteGroup::Elem>> table(8, std::vector<FiniteGroup::Elem>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int i1 = a % 4;
      const int j1 = a / 4;
      const int i2 = b % 4;
      const int j2 = b / 4;
      const int i = ((i1 + (j1 ? -i2 : i2)) % 4 + 4) % 4;
      const int j = (j1 + j2) % 2;
      table[a][b] = static_cast<FiniteGroup::Elem>(j * 4 + i);
    }
  }
  return FiniteGroup("D4", labels, table);
}

FiniteGroup pauli_group() {
  // 2x2 matrices over Z[i]; entries stored as (re, im).
  using Gauss = std::array<int, 2>;
  using Mat = std::array<Gauss, 4>;
  auto mul = [](const Mat& x, const Mat& y) {
    Mat out{};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        int re = 0;
        int im = 0;
        for (int k = 0; k < 2; ++k) {
          const Gauss& a = x[r * 2 + k];
          const Gauss& b = y[k * 2 + c];
          re += a[0] * b[0] - a[1] * b[1];
          im += a[0] * b[1] + a[1] * b[0];
        }
        out[r * 2 + c] = {re, im};
      }
    }
    return out;
  };
  const Mat one = {Gauss{1, 0}, Gauss{0, 0}, Gauss{0, 0}, Gauss{1, 0}};
  const Mat s1 = {Gauss{0, 0}, Gauss{1, 0}, Gauss{1, 0}, Gauss{0, 0}};
  const Mat s2 = {Gauss{0, 0}, Gauss{0, -1}, Gauss{0, 1}, Gauss{0, 0}};
  std::vector<Mat> elems = {one, s1, s2};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const Mat& p : {mul(elems[i], elems[j]), mul(elems[j], elems[i])}) {
        if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
      }
    }
  }
  auto neg = [](Mat m) {
    for (auto& g : m) g = {-g[0], -g[1]};
    return m;
  };
  const Mat is3 = mul(s1, s2);
  const std::vector<std::pair<std::string, Mat>> named = {
      {"1", one}, {"-1", neg(one)}, {"s1", s1}, {"-s1", neg(s1)},
      {"s2", s2}, {"-s2", neg(s2)}, {"is3", is3}, {"-is3", neg(is3)},
  };
  if (elems.size() != named.size()) raise(ErrorKind::InvalidGroup, "Pauli closure has unexpected order");
  std::vector<std::string> labels;
  std::vector<Mat> mats;
  for (const auto& [l, m] : named) {
    if (std::find(elems.begin(), elems.end(), m) == elems.end()) {
      raise(ErrorKind::InvalidGroup, "Pauli closure misses " + l);
    }
    labels.push_back(l);
    mats.push_back(m);
  }
  std::vector<std::vector<FiniteGroup::Elem>> table(8, std::vector<FiniteGroup::Elem>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      table[a][b] = static_cast<FiniteGroup::Elem>(std::find(mats.begin(), mats.end(), mul(mats[a], mats[b])) -
                                                   mats.begin());
    }
  }
  return FiniteGroup("Pauli8", labels, table);
}

}  // namespace hopfq
