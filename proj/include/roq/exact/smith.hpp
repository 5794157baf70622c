#pragma once

#include <cstddef>
#include <vector>

#include "roq/exact/int_matrix.hpp"

namespace roq {

struct SmithForm {
    IntMatrix diag;
    IntMatrix left;
    IntMatrix right;
    IntMatrix left_inv;
    IntMatrix right_inv;
    std::size_t rank = 0;

    // Nonzero diagonal entries d_1 | d_2 | ... (all positive).
    std::vector<Integer> invariants() const;
};

// left * m * right == diag, with left and right unimodular.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace roq
