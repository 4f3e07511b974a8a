#pragma once

#include <string>

#include "hopfq/graded.hpp"
#include "hopfq/heis_torus.hpp"
#include "hopfq/presentation.hpp"
#include "hopfq/report.hpp"
#include "hopfq/series.hpp"

namespace hopfq {

/// A Hopf presentation file:
///
///   {name, scalar: {conductor, hbar_order}, dim, basis: [labels],
///    unit: [coeff], mult: {"i,j": [[k, coeff], ...]},
///    coproduct: {"i": [[j, k, coeff], ...]}, counit: [coeff],
///    antipode: [[coeff]] (row r, column c = coefficient of e_r in S(e_c)),
///    commutative, cocommutative}
///
/// Coefficients are scalar-grammar strings. A missing "i,j" key is a product
/// outside the window; an empty list is zero. hbar_order is null for
/// ħ-free scalars, and every coefficient must lie in Q(ζ_conductor)[τ, τ⁻¹].
struct PresentationFile {
  HopfPresentation hopf;
  int conductor = 1;
  int hbar_order = Series::kFree;
};

/// ParseError for bad JSON or scalars, SchemaError naming the offending field
/// (including a non-invertible antipode).
PresentationFile parse_presentation(const std::string& text);
PresentationFile load_presentation(const std::string& path);
/// Canonical JSON with sorted keys; parse_presentation(dump) reproduces p.
std::string dump_presentation(const PresentationFile& p);
/// Smallest conductor covering every coefficient of h.
int presentation_conductor(const HopfPresentation& h);

/// The algebra fields of a presentation file plus `degree: [element per basis
/// index]` and either `group: {order, table: [[...]], labels: [...]}` or
/// `z_window: radius` (integer degrees).
GradedAlgebra parse_graded(const std::string& text);
std::string dump_graded(const GradedAlgebra& a);

/// List of {m, n, p, c: "a/b", coeff: "expr"}.
HeisElement parse_heis(const std::string& text, int order);
std::string dump_heis(const HeisElement& f);

/// {suite, seed, elapsed_ms, passed, checks: [{id, status,
/// residual_term_count, witness, cases}]}. elapsed_ms is written as 0 unless
/// timing is requested, so that reports are reproducible.
std::string dump_report(const Report& r, bool timing = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hopfq
