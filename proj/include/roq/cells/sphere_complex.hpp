#pragma once

#include "roq/cells/mackey.hpp"
#include "roq/exact/int_complex.hpp"

namespace roq {

enum class Variance { homological, cohomological };

struct SphereComplex {
    int n = 0;
    Variance variance = Variance::homological;
    // Homological: C_0 <- C_1 <- ... <- C_n. Cohomological: the cochain
    // complex C^0 -> ... -> C^n stored with C_{-k} = C^k.
    IntComplex complex;
};

// Reduced Bredon (co)chains of S^{n sigma} for the cell structure with one
// fixed 0-cell besides the base point and one free cell Q x e^k for each
// 1 <= k <= n. Only the constant functor Z is supported.
SphereComplex sphere_complex(int n, Variance variance, const MackeyQ& m);

// Reduced cellular chains of the orbit space S^{n sigma}/Q.
IntComplex quotient_sphere_chains(int n);

}  // namespace roq
