#pragma once

#include <functional>
#include <string>
#include <vector>

#include "roq/grading/chart.hpp"

namespace roq {

struct CheckReport {
    std::string name;
    std::vector<Degree> violations;
    std::vector<std::string> details;  // one per violation
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Rank of the underlying non-equivariant pi_{2k}: 1 at k = 0 for HZ, 1 for
// every k >= 0 for kR.
int underlying_rank(const std::string& theory, int k);

// The Gap: the diagonals x - y = -1, -2, -3 vanish. Strongly even: the
// entry at (k,k) is free of the underlying rank.
CheckReport gap_check(const Chart& c);

// Zero at x < 0 below the antidiagonal; a an isomorphism at x >= 0 below
// it (checked where the target row is in the window).
CheckReport connectivity_check(const Chart& c);

}  // namespace roq
