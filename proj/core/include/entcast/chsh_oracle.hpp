#pragma once

#include "entcast/states.hpp"

namespace entcast {

/// Validation-only oracle, not part of the criteria contract: maximize
/// |<B>| for B = a.sigma @ (b+b').sigma + a'.sigma @ (b-b').sigma over unit
/// vectors by scanning (b, b') on a spherical Fibonacci grid (the optimal a,
/// a' for fixed b, b' are closed-form), then hill-climbing around the best
/// grid pair. Approaches 2 sqrt(M(rho)) as the grid refines.
double chsh_bruteforce_max(const DensityOperator& rho, int grid_points = 2000,
                           int refine_rounds = 40);

}  // namespace entcast
