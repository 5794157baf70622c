#pragma once

#include <cstddef>
#include <vector>

#include "roq/exact/fg_abelian.hpp"
#include "roq/exact/int_matrix.hpp"
#include "roq/exact/lattice.hpp"

namespace roq {

// Bounded chain complex of free abelian groups
//   C_bottom <- C_bottom+1 <- ... <- C_top
// boundary(k) : C_k -> C_{k-1}. The constructor checks shapes and d∘d = 0.
class IntComplex {
public:
    IntComplex() = default;
    IntComplex(int bottom, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    // Cochain complex C^lo -> C^lo+1 -> ... viewed as the chain complex
    // C_{-k} = C^k.
    static IntComplex from_cochain(int lo, std::vector<std::size_t> ranks,
                                   std::vector<IntMatrix> coboundaries);

    int bottom() const { return bottom_; }
    int top() const { return bottom_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank_at(int k) const;
    // Zero matrix outside the support.
    IntMatrix boundary(int k) const;

    Subquotient homology_subquotient(int k) const;

private:
    int bottom_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;  // boundaries_[i] = d_{bottom+i+1}
};

FgAbelian homology_at(const IntComplex& c, int k);

}  // namespace roq
