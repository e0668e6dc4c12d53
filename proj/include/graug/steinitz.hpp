#pragma once

#include <vector>

#include "graug/core.hpp"

namespace graug::steinitz {

// Reorder zero-sum vectors with max-norm at most delta so that every prefix
// sum of the returned order has max-norm at most d*delta. Returns indices
// into `vectors`; position k of the result names the (k+1)-th vector.
std::vector<int> reorder(const std::vector<IntVec>& vectors, Int delta);

// largest max-norm over all prefix sums of the given order
Int prefix_radius(const std::vector<IntVec>& vectors, const std::vector<int>& perm);

}  // namespace graug::steinitz
