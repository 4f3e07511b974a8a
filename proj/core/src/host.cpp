#include "hopfq/host.hpp"

#include "hopfq/error.hpp"

namespace hopfq {

FiniteHost::FiniteHost(HopfPresentation h) : h_(std::move(h)) {
  const auto d = static_cast<std::uint32_t>(h_.dim());
  coproduct_.resize(d);
  coproduct_ok_.assign(d, false);
  for (std::uint32_t i = 0; i < d; ++i) {
    const auto& delta = h_.coalgebra.coproduct[i];
    if (!delta) continue;
    coproduct_ok_[i] = true;
    for (const auto& [ij, c] : *delta) coproduct_[i].push_back(CoTerm{ij / d, ij % d, c});
  }

  bool diag = true;
  bool group = true;
  inverse_.assign(d, d);
  for (std::uint32_t i = 0; i < d && (diag || group); ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const auto& p = h_.algebra.mult[i * d + j];
      if (!p) {
        diag = false;
        group = false;
        break;
      }
      if (i == j) {
        if (!(p->size() == 1 && (*p)[0].first == i && (*p)[0].second.is_one())) diag = false;
      } else if (!p->empty()) {
        diag = false;
      }
      if (p->size() != 1 || !(*p)[0].second.is_one()) {
        group = false;
      }
    }
    if (group) {
      const auto& delta = coproduct_[i];
      if (!coproduct_ok_[i] || delta.size() != 1 || delta[0].left != i || delta[0].right != i ||
          !delta[0].coeff.is_one()) {
        group = false;
      }
    }
  }
  if (h_.algebra.unit.size() != 1 || !h_.algebra.unit[0].second.is_one()) group = false;
  if (group) {
    const std::uint32_t e = h_.algebra.unit[0].first;
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        if ((*h_.algebra.mult[i * d + j])[0].first == e) inverse_[i] = j;
      }
      if (inverse_[i] == d) group = false;
    }
  }
  diagonal_ = diag;
  grouplike_ = group;
}

const std::vector<CoTerm>& FiniteHost::coproduct(Key a) const {
  if (!coproduct_ok_[a]) raise(ErrorKind::WindowOverflow, "coproduct of " + label(a) + " leaves the window");
  return coproduct_[a];
}

SparseVec FiniteHost::antipode(Key a) const { return h_.apply_antipode(SparseVec{{a, Scalar(1)}}); }

std::vector<FiniteHost::Key> FiniteHost::generators() const {
  std::vector<Key> out(dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Key>(i);
  return out;
}

}  // namespace hopfq
