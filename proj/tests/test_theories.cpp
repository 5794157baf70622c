#include "doctest.h"

#include "roq/exact/extensions.hpp"
#include "roq/exact/hom.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/io/seed_format.hpp"
#include "roq/tate/tate_square.hpp"
#include "roq/theories/bockstein.hpp"
#include "roq/theories/hfpss.hpp"
#include "roq/theories/lemmas.hpp"
#include "roq/theories/slice.hpp"
#include "roq/theories/theta.hpp"
#include "roq/util/errors.hpp"

using namespace roq;

namespace {

const FgAbelian Z = FgAbelian::free(1);
const FgAbelian F2 = FgAbelian::cyclic(2);
const FgAbelian O;

GeneratorName g(const std::string& s) { return GeneratorName::parse(s); }

const BocksteinResult& bss() {
    static const BocksteinResult r = run_bockstein(Window::square(-10, 10), 4, [](const Degree& d, const auto&) {
        return closed_form_kr(Window::square(-10, 10)).group_at(d);
    });
    return r;
}

}  // namespace

TEST_CASE("seeds") {
    TheorySeed hz = hz_seed();
    CHECK(hz.name == "hz");
    CHECK(hz.alphabet.size() == 2);
    CHECK(hz.reach() == 1);
    TheorySeed kr = kr_seed();
    CHECK(kr.reach() == 3);
    CHECK(kr.differentials.size() == 2);
    CHECK(kr.differentials[1].gens[2].power == 2);
    CHECK(kr.multipliers.size() == 3);
    CHECK(kr.connective);
    CHECK_THROWS_AS(seed_for("ku"), UsageError);
    // Round trip through the text format.
    TheorySeed again = parse_seed(serialize_seed(kr));
    CHECK(serialize_seed(again) == serialize_seed(kr));
    CHECK(again.differentials[1].images.at("u") == kr.differentials[1].images.at("u"));
}

TEST_CASE("hfpss outputs") {
    Window w = Window::square(-9, 9);
    HfpssResult hz = run_hfpss(hz_seed(), w);
    CHECK(hz.hfp.group_at({0, -1}) == F2);
    CHECK(hz.hfp.group_at({-2, 2}) == Z);
    CHECK(hz.multi_filtration.empty());
    CHECK(hz.collapse_page == 2);
    // Negative integer line: H^*(BQ; Z) = Z[y]/(2y).
    for (int n = 0; n <= 8; ++n) CHECK(hz.hfp.group_at({-n, 0}) == (n == 0 ? Z : n % 2 == 0 ? F2 : O));

    HfpssResult kr = run_hfpss(kr_seed(), w);
    CHECK(kr.collapse_page == 4);
    CHECK(kr.pages.count(2) == 1);
    CHECK(kr.pages.count(4) == 1);
    CHECK(kr.hfp.group_at({1, 0}) == F2);
    CHECK(kr.hfp.group_at({8, -8}) == Z);
    const FgAbelian ko[] = {Z, F2, F2, O, Z, O, O, O, Z};
    for (int n = 0; n <= 8; ++n) CHECK(kr.hfp.group_at({n, 0}) == ko[n]);
    for (int n = 1; n <= 8; ++n) CHECK(kr.hfp.group_at({-n, 0}) == (n % 4 == 0 ? F2 : O));
    // U v4 is the Bott class: U^-1 v^4 ... multiplication by vbar from (7,1).
    CHECK(kr.hfp.mult_map("vbar", {0, 0}) == IntMatrix{{1}});
}

TEST_CASE("theta") {
    CHECK(theta_apply(g("u")) == g("a^3"));
    CHECK(!theta_apply(g("u^2")));
    CHECK(theta_apply(g("a^2*u^3")) == g("a^5*u^2"));
    CHECK(!theta_apply(g("2*u^-1")));
    CHECK(theta_apply(g("t(1,6)")) == g("t(2,5)"));
    CHECK(!theta_apply(g("t(1,5)")));
    CHECK(!theta_apply(g("t(2,9)")));
    CHECK_THROWS_AS(theta_apply(g("a*u^-3")), RoqError);
    // theta^2 = 0 and the degree is -(2,1) on every generator.
    Chart hz = closed_form_hz(Window::square(-14, 14));
    for (const auto& [d, e] : hz.entries())
        for (const auto& lg : e.gens) {
            auto img = theta_apply(lg.name);
            if (!img) continue;
            CHECK(img->degree() == d + kThetaDegree);
            CHECK(!theta_apply(*img));
        }
    CHECK(theta_law_violations(hz).empty());
}

TEST_CASE("Bockstein spectral sequence") {
    const BocksteinResult& r = bss();
    Chart kr = closed_form_kr(Window::square(-10, 10));
    for (const auto& [d, e] : kr.entries()) CHECK(r.chart.group_at(d) == e.group);
    for (const auto& [d, e] : r.chart.entries()) CHECK(kr.group_at(d) == e.group);
    CHECK(r.floor_group(1, {1, 0}) == F2);
    CHECK(r.floor_group(2, {4, 0}) == Z);
    CHECK(r.chart.group_at({-1, 1}).is_zero());
    CHECK(r.chart.group_at({-2, 0}).is_zero());
    // 2 vhat^2 u is a circle.
    bool circle = false;
    for (const auto& f : r.floors)
        if (f.floor == 2 && f.base == Degree{2, -2}) circle = f.circle;
    CHECK(circle);
    // Multi-floor degrees admit the chosen group as a filtration.
    for (const auto& d : r.multi_floor) {
        std::vector<FgAbelian> pieces;
        for (const auto& f : r.floors)
            if (f.total() == d) pieces.insert(pieces.begin(), f.group);
        CHECK(admits_filtration(r.chart.group_at(d), pieces));
    }
    CHECK_THROWS_AS(run_bockstein(Window::square(-6, 6)), ExtensionAmbiguityError);

    BocksteinResult phi = run_bockstein_phi(Window::square(-6, 9));
    for (int n = 0; n <= 9; ++n) CHECK(phi.chart.group_at({n, 0}) == (n % 4 == 0 ? F2 : O));
    CHECK(phi.chart.group_at({1, 0}).is_zero());
}

TEST_CASE("slice coordinates") {
    for (int xb = -5; xb <= 5; ++xb)
        for (int yb = 0; yb <= 5; ++yb) {
            auto [xs, ys] = slice_coordinates(xb, yb);
            CHECK(bockstein_box(xs, ys) == std::pair{xb, yb});
        }
    CHECK_THROWS_AS(bockstein_box(1, 0), RoqError);
    const BocksteinResult& r = bss();
    CHECK(slice_entry(r, 0, 0).einf == Z);
    CHECK(slice_entry(r, 1, 1).einf == F2);
    CHECK(slice_entry(r, -2, 0).einf.is_zero());
    CHECK(slice_entry(r, 1, 0).einf.is_zero());

    auto d0 = blob_diagonal(r, 0, 6);
    for (int k = 0; k < 6; ++k) {
        CHECK(!d0[k].e1.is_zero());
        CHECK(d0[k].einf.is_zero() == (k >= 3));
    }
    for (const auto& e : blob_diagonal(r, -2, 6)) CHECK(e.einf.is_zero());
    auto d2 = blob_diagonal(r, 2, 6);
    CHECK(d2[0].e1.is_zero());
    CHECK(d2[1].e1.is_zero());
    CHECK(d2[2].e1 == Z);
    CHECK(d2[2].einf == Z);
    for (int k = 3; k < 6; ++k) CHECK(d2[k].einf.is_zero());
    CHECK(blob_diagonal(r, 4, 1)[0].e1.is_zero());
}

TEST_CASE("structural lemmas") {
    Window w = Window::square(-12, 12);
    for (const Chart& c : {closed_form_hz(w), closed_form_kr(w)}) {
        CHECK(gap_check(c).ok());
        CHECK(connectivity_check(c).ok());
    }
    Chart bad = closed_form_hz(w);
    bad.set_entry({-1, 1}, ChartEntry::bare(F2));
    CheckReport r = gap_check(bad);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0] == Degree{-1, 1});
    Chart below = closed_form_kr(w);
    below.set_entry({-3, -2}, ChartEntry::bare(F2));
    CheckReport rc = connectivity_check(below);
    REQUIRE(rc.violations.size() == 1);
    CHECK(rc.violations[0] == Degree{-3, -2});

    HfpssResult hz = run_hfpss(hz_seed(), Window::square(-6, 6));
    Chart tate = invert_a(hz.hfp).tate.restricted(Window::square(-6, 6));
    CHECK(!connectivity_check(tate).ok());
}
