#pragma once

#include "thinlab/core/word.hpp"

namespace thinlab {

// S = [[0,1],[-1,0]], T = [[1,1],[0,1]], named "S" and "T".
const GeneratorSet& standard_st();

// Word over standard_st() evaluating exactly to m. Euclid on the left column with T-shears
// and S-swaps, then a T-power (times S^2 when the remainder is -T^b).
// Throws DimensionError for n != 2 and std::invalid_argument when det m != 1.
Word rewrite_in_ST(const IntMatrix& m);

}  // namespace thinlab
