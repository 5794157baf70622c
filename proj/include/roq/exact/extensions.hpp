#pragma once

#include <vector>

#include "roq/exact/fg_abelian.hpp"

namespace roq {

// All groups E (up to isomorphism) fitting into 0 -> sub -> E -> quot -> 0,
// sorted by their text form.
std::vector<FgAbelian> possible_extensions(const FgAbelian& sub, const FgAbelian& quot);

// Whether g has a filtration with the given subquotients, listed from the
// bottom (smallest submodule) upwards.
bool admits_filtration(const FgAbelian& g, const std::vector<FgAbelian>& pieces);

// Every group with a filtration with the given subquotients.
std::vector<FgAbelian> filtered_candidates(const std::vector<FgAbelian>& pieces);

}  // namespace roq
