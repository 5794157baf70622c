#pragma once

#include <map>
#include <vector>

#include "roq/grading/chart.hpp"
#include "roq/theories/seed.hpp"

namespace roq {

struct HfpssOptions {
    int padding = 4;
    unsigned threads = 1;
};

struct HfpssResult {
    // Computed on hfp_window(w, padding).
    Chart hfp;
    // E^{r+1} after each seeded d^r, as bare charts on the same window.
    std::map<int, Chart> pages;
    // Degrees with more than one contributing filtration.
    std::vector<Degree> multi_filtration;
    int collapse_page = 1;
};

// w padded, extended downwards so that every column reaches below the
// antidiagonal far enough for the a-columns to stabilise.
Window hfp_window(const Window& w, int padding);

// Runs the seeded hfpss. Between and after the seeded pages every possible
// differential is searched for and refused.
HfpssResult run_hfpss(const TheorySeed& seed, const Window& w, const HfpssOptions& opts = {});

}  // namespace roq
