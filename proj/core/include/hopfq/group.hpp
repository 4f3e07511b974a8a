#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfq {

/// Finite group by multiplication table.
class FiniteGroup {
 public:
  using Elem = std::uint32_t;

  /// Validates the table (Latin square, associativity, identity, inverses);
  /// throws InvalidGroup otherwise.
  FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<std::vector<Elem>> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Elem g) const { return labels_.at(g); }
  const std::vector<std::vector<Elem>>& table() const noexcept { return table_; }

  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem identity() const noexcept { return identity_; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  bool abelian() const noexcept { return abelian_; }
  /// Index of a label; throws SchemaError when absent.
  Elem find(const std::string& label) const;
  /// Elements commuting with everything.
  std::vector<Elem> center() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Elem>> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  bool abelian_ = true;
};

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Z2^3 with index 0 the identity and index i the sign triple of the
/// octonion unit e_i: e1=(-,+,+), e2=(+,-,+), e3=(-,-,+), e4=(-,-,-),
/// e5=(+,-,-), e6=(-,+,-), e7=(+,+,-).
FiniteGroup z2_cubed();
/// Z2 x Z2 as sign pairs: 1=(+,+), a=(-,+), b=(+,-), ab=(-,-).
FiniteGroup klein_four();
FiniteGroup symmetric_group_s3();
FiniteGroup dihedral_group_d4();
/// The order-8 group generated by the Pauli matrices sigma1, sigma2, built
/// by closing 2x2 Gaussian-integer matrix products. Contains -1 (central).
FiniteGroup pauli_group();

}  // namespace hopfq
