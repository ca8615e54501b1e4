#pragma once

#include "fourman/geography.hpp"

#include <vector>

namespace fourman::kernels {

// Serial references test every lattice point against the predicate.
std::vector<BkPoint> bk_region_serial(const BkQuery& query);
std::vector<FreeActionPoint> free_action_region_serial(const GeographyQuery& query);

// Row-bounded OpenMP kernels; rows are merged in increasing order so the
// output matches the serial reference exactly.
std::vector<BkPoint> bk_region_parallel(const BkQuery& query);
std::vector<FreeActionPoint> free_action_region_parallel(const GeographyQuery& query);

/// k = floor(3n/2d) + 1 - n/d for d | n.
Integer free_action_k(const Integer& n, const Integer& d);

} // namespace fourman::kernels
