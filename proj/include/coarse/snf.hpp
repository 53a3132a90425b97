/**
 * Smith normal form over arbitrary-precision integers with tracked
 * unimodular factors: left * m * right == diag, diag with a divisor chain.
 */

#ifndef COARSE_SNF_HPP
#define COARSE_SNF_HPP

#include <vector>

#include "coarse/numbers.hpp"

namespace coarse {

struct SmithResult {
    IntegerMatrix left;   // rows x rows, unimodular
    IntegerMatrix diag;   // rows x cols, nonnegative diagonal, d_i | d_{i+1}
    IntegerMatrix right;  // cols x cols, unimodular
    std::vector<Integer> divisors;  // the nonzero diagonal entries

    int rank() const { return static_cast<int>(divisors.size()); }
};

SmithResult smith_normal_form(const IntegerMatrix& m);

}  // namespace coarse

#endif  // COARSE_SNF_HPP
