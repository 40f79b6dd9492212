#pragma once

#include "coreduce/linalg.hpp"

#include <vector>

namespace coreduce {

// One interior point for every chamber of the central arrangement
// { x in Q^dim : <h, x> = 0 }, h in normals. Points are pairwise in distinct
// chambers and lie on no hyperplane. Exact; intended for essential rank <= 5.
std::vector<QVec> chamber_points(const std::vector<Vec>& normals, int dim);

// Sign of <h, x> for every normal.
std::vector<int> sign_vector(const std::vector<Vec>& normals, const QVec& x);

}  // namespace coreduce
