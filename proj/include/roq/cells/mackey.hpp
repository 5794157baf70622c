#pragma once

#include "roq/exact/fg_abelian.hpp"
#include "roq/exact/int_matrix.hpp"

namespace roq {

// A Mackey functor for the group Q of order 2, on free abelian values.
struct MackeyQ {
    std::size_t top_rank = 0;     // value at Q/Q
    std::size_t bottom_rank = 0;  // value at Q/1
    IntMatrix res;                // Q/Q -> Q/1
    IntMatrix ind;                // Q/1 -> Q/Q
    IntMatrix weyl;               // involution of the Q/1 value

    // Shapes, weyl^2 = 1, weyl res = res, ind weyl = ind and the double
    // coset formula res ind = 1 + weyl.
    void validate() const;
    bool operator==(const MackeyQ&) const = default;

    // res = 1, ind = 2, trivial Weyl action.
    static MackeyQ constant_z();
};

}  // namespace roq
