#pragma once

#include <functional>

#include "hopfq/presentation.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

/// Applies f to leg `leg` (0-based) of a flat tensor of the given arity;
/// f maps a basis index to a flat tensor of arity `out_arity`.
SparseVec map_leg(const SparseVec& t, int arity, int leg, std::uint32_t d,
                  const std::function<SparseVec(std::uint32_t)>& f, int out_arity);

/// Leg-wise product in A^{⊗arity}.
SparseVec multiply_legs(const AlgebraPresentation& a, const SparseVec& x, const SparseVec& y, int arity);

/// Unit laws and (quasi-)associativity on all basis pairs/triples.
Report verify_algebra(const AlgebraPresentation& a);
/// Coassociativity and counit laws on all basis elements.
Report verify_coalgebra(const CoalgebraPresentation& c);

/// Bialgebra and antipode axioms, S(1)=1, S(ab)=S(b)S(a) on all basis
/// pairs, and S^2=id when the commutative or cocommutative flag is set.
/// Cases that leave a finite window are skipped.
Report verify_hopf(const HopfPresentation& h);

}  // namespace hopfq
