#pragma once

#include <string_view>

#include "hopfq/series.hpp"

namespace hopfq {

/// Parses the scalar grammar: integers, `+ - * / ^`, parentheses,
/// `z(N,k)` = exp(2 pi i k / N), `tau` and the formal parameter `h`.
/// Exponents are (optionally signed) integer literals. `h` is only allowed
/// when a truncation order is given. Throws ParseError with a 1-based
/// line/column.
Scalar parse_scalar(std::string_view text, int order = Series::kFree);

}  // namespace hopfq
