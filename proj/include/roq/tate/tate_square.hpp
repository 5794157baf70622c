#pragma once

#include <functional>
#include <map>
#include <vector>

#include "roq/grading/chart.hpp"

namespace roq {

// Per-degree matrices of a map between charts on standard generators.
using DegreeMaps = std::map<Degree, IntMatrix>;

// Chooses the extension at a degree where both sides of a long exact
// sequence contribute and the candidates differ.
using ExtensionResolver = std::function<FgAbelian(const Degree&, const std::vector<FgAbelian>&)>;

struct Localization {
    Chart tate;
    DegreeMaps map;  // hfp -> tate
};

struct ConnectiveCover {
    Chart phi;
    DegreeMaps map;  // phi -> tate
};

struct TateSquareData {
    Chart hfp;
    Chart tate;
    Chart orbits;
    Chart phi;
    Chart genuine;
    DegreeMaps localization;
    DegreeMaps inclusion;
    // Degrees where both sides of a sequence contribute.
    std::vector<Degree> orbit_extensions;
    std::vector<Degree> genuine_extensions;
};

// Colimit along a within each column. The a-maps out of the lowest
// `stable_steps` rows must be isomorphisms (InstabilityError otherwise);
// the bottom group is the colimit. Requires "a" maps on c.
Localization invert_a(const Chart& c, int stable_steps = 2);

// ker(hfp_d -> tate_d) and coker(hfp_d' -> tate_d') at d' = d + (1,0).
// Split when the kernel part is free; other two-sided degrees are
// resolved or raise ExtensionAmbiguityError. Window: that of tate with
// the last column dropped.
Chart homotopy_orbits(const Chart& hfp, const Chart& tate, const DegreeMaps& loc,
                      const ExtensionResolver& resolver = {}, std::vector<Degree>* two_sided = nullptr);

// Integer line of an a-periodic chart truncated to x >= 0, spread over
// all rows. RoqError when tate is not a-periodic.
ConnectiveCover geometric_fixed_points(const Chart& tate);

// Mayer-Vietoris for the pullback hfp x_tate phi on window w.
Chart assemble_genuine(const TateSquareData& data, const Window& w, const ExtensionResolver& resolver = {},
                       std::vector<Degree>* two_sided = nullptr);

// The whole square from an hfp chart whose window contains w padded by 1.
TateSquareData run_tate_square(const Chart& hfp, const Window& w, const ExtensionResolver& resolver = {});

// Answers with the group of `reference`; callers check it is a candidate.
ExtensionResolver chart_resolver(const Chart& reference);

}  // namespace roq
