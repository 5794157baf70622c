#pragma once

#include <functional>
#include <vector>

#include "roq/grading/chart.hpp"
#include "roq/tate/tate_square.hpp"

namespace roq {

// A class group of E2 = E-infinity on floor s at HZ degree base; its total
// degree is base + s(1,1).
struct FloorEntry {
    int floor = 0;
    Degree base;
    FgAbelian group;
    // Z generated by twice an E1 generator.
    bool circle = false;
    Degree total() const { return base + Degree{floor, floor}; }
};

struct BocksteinResult {
    Chart chart;
    std::vector<FloorEntry> floors;  // sorted by (total, floor)
    int top_floor = 0;
    // Total degrees with more than one contributing floor.
    std::vector<Degree> multi_floor;
    // Multi-floor degrees whose extension needed the resolver.
    std::vector<Degree> resolved;
    // Every (source, target) pair checked for d^r, r >= 2.
    std::size_t higher_pairs_checked = 0;

    // The E-infinity group on floor s at total degree d (zero if none).
    FgAbelian floor_group(int s, const Degree& d) const;
};

// E1 = base[vhat] with d1 = theta. `base` gives the labelled floor chart on
// a window. Floors 0..x_max + y_max + padding. Higher differentials are
// refused if any Hom-nonzero pair exists. Multi-floor degrees take the
// unique extension compatible with the filtration, else the resolver,
// else ExtensionAmbiguityError.
BocksteinResult run_bockstein_on(const std::function<Chart(const Window&)>& base, const Window& w, int padding,
                                 const ExtensionResolver& resolver = {}, const std::string& theory = "kr");

// The Dugger/Bockstein spectral sequence HZ[vhat] => kR.
BocksteinResult run_bockstein(const Window& w, int padding = 4, const ExtensionResolver& resolver = {});

// The same sequence on the a-inverted floors closed_form_hz_phi, whose
// integer line computes the geometric fixed points of kR.
BocksteinResult run_bockstein_phi(const Window& w, int padding = 4);

// (d1)^2 = 0 and the degree of theta on every labelled entry of c.
// Returns the degrees where either fails.
std::vector<Degree> theta_law_violations(const Chart& c);

}  // namespace roq
