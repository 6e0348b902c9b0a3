#pragma once

#include <optional>
#include <span>

#include "algdesign/linalg.hpp"

namespace algdesign {

/// Exact LP: a vertex w >= 0 minimising sum(w) subject to row . w >= 1 for
/// every row, or nullopt when the system is infeasible. Rows have length
/// `dim`; an empty system yields the zero vector.
std::optional<RationalVector> covering_solution(std::span<const RationalVector> rows, std::size_t dim);

/// As covering_solution with w unrestricted in sign.
std::optional<RationalVector> free_covering_solution(std::span<const RationalVector> rows, std::size_t dim);

}  // namespace algdesign
