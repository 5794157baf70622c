#include "doctest.h"

#include "roq/exact/hom.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/tate/tate_square.hpp"
#include "roq/theories/hfpss.hpp"
#include "roq/util/errors.hpp"

using namespace roq;

namespace {

const FgAbelian Z = FgAbelian::free(1);
const FgAbelian F2 = FgAbelian::cyclic(2);

const Window kW = Window::square(-10, 10);

const HfpssResult& hz_hfp() {
    static const HfpssResult r = run_hfpss(hz_seed(), kW);
    return r;
}

const HfpssResult& kr_hfp() {
    static const HfpssResult r = run_hfpss(kr_seed(), kW);
    return r;
}

ExtensionResolver reference_resolver(const Chart& ref) {
    return [ref](const Degree& d, const std::vector<FgAbelian>&) { return ref.group_at(d); };
}

bool same_groups(const Chart& a, const Chart& b, const Window& w) {
    for (int x = w.x_min; x <= w.x_max; ++x)
        for (int y = w.y_min; y <= w.y_max; ++y)
            if (!(a.group_at({x, y}) == b.group_at({x, y}))) return false;
    return true;
}

}  // namespace

TEST_CASE("invert a") {
    const Chart& hfp = hz_hfp().hfp;
    Localization loc = invert_a(hfp);
    const Window& w = loc.tate.window();
    for (int x = w.x_min; x <= w.x_max; ++x)
        for (int y = w.y_min; y <= w.y_max; ++y) CHECK(loc.tate.group_at({x, y}) == (x % 2 == 0 ? F2 : FgAbelian()));
    // Idempotent.
    Localization again = invert_a(loc.tate);
    CHECK(again.tate.entries() == loc.tate.entries());
    CHECK(loc.map.at({0, 0}) == IntMatrix{{1}});

    Localization kr = invert_a(kr_hfp().hfp);
    for (int x = w.x_min; x <= w.x_max; ++x)
        CHECK(kr.tate.group_at({x, 3}) == (((x % 4) + 4) % 4 == 0 ? F2 : FgAbelian()));

    Chart lone("t", "hfp", Window{-2, 2, -5, 2});
    lone.set_entry({0, 0}, ChartEntry::bare(Z));
    lone.mark_complete("a");
    CHECK(invert_a(lone).tate.entries().empty());

    // A column which keeps growing does not stabilise.
    Chart grow("t", "hfp", Window{0, 0, -3, 0});
    for (int y = -3; y <= 0; ++y) grow.set_entry({0, y}, ChartEntry::bare(FgAbelian::cyclic(Integer(1) << (4 + y))));
    for (int y = -2; y <= 0; ++y) grow.set_map("a", {0, y}, IntMatrix{{2}});
    CHECK_THROWS_AS(invert_a(grow), InstabilityError);
    CHECK_THROWS_AS(invert_a(Chart("t", "hfp", Window{0, 0, 0, 1})), WindowError);
}

TEST_CASE("homotopy orbits and geometric fixed points") {
    const Chart& hfp = hz_hfp().hfp;
    Localization loc = invert_a(hfp);
    std::vector<Degree> flagged;
    Chart orbits = homotopy_orbits(hfp, loc.tate, loc.map, {}, &flagged);
    CHECK(flagged.empty());
    CHECK(orbits.group_at({0, 0}) == Z);
    CHECK(orbits.group_at({-2, 2}) == Z);
    CHECK(orbits.group_at({-1, 1}) == F2);
    CHECK(orbits.group_at({-1, 5}) == F2);
    CHECK(orbits.group_at({-1, 0}).is_zero());
    CHECK(orbits.group_at({-3, 3}) == F2);
    CHECK(orbits.group_at({-3, 2}).is_zero());
    CHECK(orbits.group_at({0, -1}).is_zero());
    // Orbits are a-power torsion: nothing survives inverting a.
    Chart tall = orbits.restricted(Window{-12, 12, -20, 3});
    CHECK(invert_a(tall).tate.entries().empty());

    ConnectiveCover cover = geometric_fixed_points(loc.tate);
    CHECK(cover.phi.group_at({0, 5}) == F2);
    CHECK(cover.phi.group_at({4, -7}) == F2);
    CHECK(cover.phi.group_at({-2, 0}).is_zero());
    CHECK(cover.phi.group_at({1, 0}).is_zero());
    CHECK(geometric_fixed_points(Chart("t", "tate", kW)).phi.entries().empty());
    Chart bumpy("t", "tate", Window::square(0, 1));
    bumpy.set_entry({0, 0}, ChartEntry::bare(F2));
    CHECK_THROWS_AS(geometric_fixed_points(bumpy), RoqError);

    // Zero Tate chart: orbits = hfp.
    Chart zero("hz", "tate", loc.tate.window());
    Chart same = homotopy_orbits(hfp, zero, {});
    CHECK(same_groups(same, hfp, kW));
}

TEST_CASE("genuine charts from the Tate square") {
    TateSquareData hz = run_tate_square(hz_hfp().hfp, kW);
    CHECK(hz.genuine_extensions.empty());
    CHECK(same_groups(hz.genuine, closed_form_hz(kW), kW));
    CHECK(hz.genuine.mult_map("a", {2, -3}) == IntMatrix{{1}});

    CHECK_THROWS_AS(run_tate_square(kr_hfp().hfp, kW), ExtensionAmbiguityError);
    Chart ref = closed_form_kr(kW.padded(1));
    TateSquareData kr = run_tate_square(kr_hfp().hfp, kW, reference_resolver(ref));
    CHECK(same_groups(kr.genuine, closed_form_kr(kW), kW));
    CHECK(kr.genuine.group_at({-5, 7}) == Z + F2);
    CHECK(kr.genuine.group_at({-5, 10}) == F2 + F2);

    // phi = tate makes the square degenerate.
    TateSquareData deg = hz;
    deg.phi = deg.tate;
    deg.inclusion.clear();
    for (const auto& [d, e] : deg.tate.entries()) deg.inclusion.emplace(d, IntMatrix::identity(e.group.num_generators()));
    CHECK(same_groups(assemble_genuine(deg, kW), hz.hfp, kW));
    CHECK_THROWS_AS(assemble_genuine(hz, Window::square(-30, 30)), WindowError);
}
