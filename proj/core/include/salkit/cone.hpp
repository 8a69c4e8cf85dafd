#pragma once

#include <vector>

#include "salkit/sign_vector.hpp"

namespace salkit {

// Decides whether some point x satisfies <a_v, x> = 0 where pattern(v) = 0,
// > 0 where pattern(v) = +, < 0 where pattern(v) = -. Strict inequalities are
// normalized to >= 1 (valid for central arrangements by scale invariance),
// then the equality subspace is substituted out by exact Gaussian elimination
// and the residual system is decided by Fourier-Motzkin elimination.
bool cone_feasible(const std::vector<std::vector<long long>>& normals,
                   const SignVector& pattern);

} // namespace salkit
