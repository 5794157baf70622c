#pragma once

#include <vector>

#include "roq/exact/fg_abelian.hpp"
#include "roq/exact/int_matrix.hpp"
#include "roq/exact/lattice.hpp"

namespace roq {

// Homomorphisms between groups in normal form are matrices on the standard
// generators (free first, then torsion), rows indexed by the target.

// Reduces row i modulo the order of target generator i.
IntMatrix reduce_to_target(const IntMatrix& m, const FgAbelian& target);

// Checks that m defines a homomorphism source -> target.
bool is_homomorphism(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target);

Subquotient kernel_of(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target);
Subquotient cokernel_of(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target);
bool is_isomorphism(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target);

// Relations of the direct sum of the groups on the concatenated standard
// generators.
Lattice relation_lattice(const std::vector<FgAbelian>& summands);

// Hom(g, h) != 0
bool hom_nonzero(const FgAbelian& g, const FgAbelian& h);

}  // namespace roq
