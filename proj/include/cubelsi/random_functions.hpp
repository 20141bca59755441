#ifndef CUBELSI_RANDOM_FUNCTIONS_HPP
#define CUBELSI_RANDOM_FUNCTIONS_HPP

// Generators for randomized property suites. All draws come from the Rng
// passed in, so a (seed, stream) pair fixes the function exactly.

#include "cubelsi/symgroup.hpp"

namespace cubelsi {

/// i.i.d. standard normal entries.
CubeFunction random_gaussian_function(int n, int d, Rng& rng);

/// `terms` Walsh characters of level <= max_level with Gaussian vector coefficients.
CubeFunction random_walsh_sparse(int n, int d, int terms, int max_level, Rng& rng);

/// 0/1 indicator of a random set with the given density.
CubeFunction random_indicator(int n, double density, Rng& rng);

/// A family picked at random: Gaussian, Walsh-sparse, sparse support,
/// heavy-tailed, subcube indicator, or near-constant. Used to stress suites.
CubeFunction random_mixed_function(int n, int d, Rng& rng);

/// Nonnegative scalar function with sigma{h = 0} >= 1/2: (g - median g)_+.
CubeFunction random_half_zero_function(int n, Rng& rng);

/// Mixed-family random function on S_n.
PermFunction random_perm_function(int n, int d, Rng& rng);

}  // namespace cubelsi

#endif  // CUBELSI_RANDOM_FUNCTIONS_HPP
