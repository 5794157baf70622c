#include "roq/cli/verify.hpp"

#include <map>
#include <optional>

#include <fmt/format.h>

#include "roq/cells/bredon.hpp"
#include "roq/exact/extensions.hpp"
#include "roq/exact/fg_abelian.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/io/chart_format.hpp"
#include "roq/tate/tate_square.hpp"
#include "roq/theories/bockstein.hpp"
#include "roq/theories/hfpss.hpp"
#include "roq/util/errors.hpp"

namespace roq {

namespace {

// Charts shared by the suites of one run.
struct Computed {
    const VerifyOptions& opts;
    std::map<std::string, HfpssResult> hfpss;
    std::map<std::string, TateSquareData> tate;
    std::optional<BocksteinResult> bss;

    const HfpssResult& hfp(const std::string& theory) {
        auto it = hfpss.find(theory);
        if (it == hfpss.end())
            it = hfpss.emplace(theory, run_hfpss(seed_for(theory), opts.window, {opts.padding, opts.threads})).first;
        return it->second;
    }
    const TateSquareData& square(const std::string& theory) {
        auto it = tate.find(theory);
        if (it == tate.end()) {
            ExtensionResolver resolver;
            if (theory == "kr") resolver = chart_resolver(closed_form_kr(opts.window.padded(1)));
            it = tate.emplace(theory, run_tate_square(hfp(theory).hfp, opts.window, resolver)).first;
        }
        return it->second;
    }
    const BocksteinResult& bockstein() {
        if (!bss) bss = run_bockstein(opts.window, opts.padding, chart_resolver(square("kr").genuine));
        return *bss;
    }
};

std::string group_text(const FgAbelian& g) { return g.is_zero() ? "0" : g.to_string(); }

void expect_group(CheckReport& r, const Chart& c, const Degree& d, const FgAbelian& want) {
    if (!c.window().contains(d)) return;
    const FgAbelian& got = c.group_at(d);
    if (got == want) return;
    r.violations.push_back(d);
    r.details.push_back(fmt::format("{}: {} expected {}", d.to_string(), group_text(got), group_text(want)));
}

void gap_suite(Computed& c, std::vector<CheckReport>& out) {
    for (const std::string theory : {"hz", "kr"}) {
        CheckReport r = gap_check(c.square(theory).genuine);
        r.name = theory + " genuine " + r.name;
        out.push_back(r);
    }
}

void connectivity_suite(Computed& c, std::vector<CheckReport>& out) {
    for (const std::string theory : {"hz", "kr"}) {
        CheckReport r = connectivity_check(c.square(theory).genuine);
        r.name = theory + " genuine " + r.name;
        out.push_back(r);
    }
}

// Composition factors everywhere, exact groups where one floor contributes.
void bockstein_cross(Computed& c, std::vector<CheckReport>& out) {
    const Window& w = c.opts.window;
    const BocksteinResult& bss = c.bockstein();
    std::map<Degree, std::vector<FgAbelian>> pieces;
    // bottom (highest floor) first
    for (const auto& f : bss.floors) pieces[f.total()].insert(pieces[f.total()].begin(), f.group);
    Chart closed = closed_form_kr(w);
    const Chart& tate = c.square("kr").genuine;
    CheckReport factors{"kr bockstein floors filter the other charts", {}, {}};
    CheckReport single{"kr bockstein single-floor degrees", {}, {}};
    for (int x = w.x_min; x <= w.x_max; ++x) {
        for (int y = w.y_min; y <= w.y_max; ++y) {
            Degree d{x, y};
            auto it = pieces.find(d);
            std::vector<FgAbelian> ps = it == pieces.end() ? std::vector<FgAbelian>{} : it->second;
            for (const Chart* other : std::initializer_list<const Chart*>{&tate, &closed}) {
                if (admits_filtration(other->group_at(d), ps)) continue;
                factors.violations.push_back(d);
                factors.details.push_back(fmt::format("{}: {} ({}) has no filtration by the floors of {}", d.to_string(),
                                                      other->pipeline(), group_text(other->group_at(d)),
                                                      group_text(bss.chart.group_at(d))));
            }
            if (ps.size() > 1) continue;
            FgAbelian g = ps.empty() ? FgAbelian() : ps.front();
            for (const Chart* other : std::initializer_list<const Chart*>{&tate, &closed}) {
                if (other->group_at(d) == g) continue;
                single.violations.push_back(d);
                single.details.push_back(fmt::format("{}: bockstein {} vs {} {}", d.to_string(), group_text(g),
                                                     other->pipeline(), group_text(other->group_at(d))));
            }
        }
    }
    out.push_back(factors);
    out.push_back(single);
    out.push_back(compare_groups("kr bockstein == closed", bss.chart, closed, w));
}

void cross_suite(Computed& c, std::vector<CheckReport>& out) {
    const Window& w = c.opts.window;
    Chart hz_closed = closed_form_hz(w);
    out.push_back(compare_groups("hz cells == closed", cellular_chart_hz(w, c.opts.threads), hz_closed, w));
    out.push_back(compare_groups("hz tate == closed", c.square("hz").genuine, hz_closed, w));
    out.push_back(compare_groups("kr tate == closed", c.square("kr").genuine, closed_form_kr(w), w));
    bockstein_cross(c, out);
    if (c.opts.golden.empty()) return;
    Chart golden = read_chart_file(c.opts.golden);
    Window gw = golden.window().intersect(w);
    out.push_back(compare_groups("golden == kr closed", golden, closed_form_kr(gw), gw));
    out.push_back(compare_groups("golden == kr tate", golden, c.square("kr").genuine, gw));
    out.push_back(compare_groups("golden == kr bockstein", golden, c.bockstein().chart, gw));
}

void axes_suite(Computed& c, std::vector<CheckReport>& out) {
    const FgAbelian Z = FgAbelian::free(1), F2 = FgAbelian::cyclic(2), O;
    const Window& w = c.opts.window;
    Chart hz = c.hfp("hz").hfp.restricted(w);
    Chart kr = c.hfp("kr").hfp.restricted(w);

    // group cohomology Z[y]/(2y), y in codegree 2
    CheckReport hneg{"hz homotopy fixed points, negative line", {}, {}};
    for (int x = 0; x >= w.x_min; --x) expect_group(hneg, hz, {x, 0}, x == 0 ? Z : (x % 2 == 0 ? F2 : O));
    out.push_back(hneg);

    // ko_* in degrees 0..8, then 8-periodic
    CheckReport kpos{"kr homotopy fixed points, positive line", {}, {}};
    const FgAbelian ko[8] = {Z, F2, F2, O, Z, O, O, O};
    for (int x = 0; x <= w.x_max; ++x) expect_group(kpos, kr, {x, 0}, ko[x % 8]);
    out.push_back(kpos);

    // Z[Y]/(2Y), Y in codegree 4
    CheckReport kneg{"kr homotopy fixed points, negative line", {}, {}};
    for (int x = 0; x >= w.x_min; --x) expect_group(kneg, kr, {x, 0}, x == 0 ? Z : (x % 4 == 0 ? F2 : O));
    out.push_back(kneg);
}

}  // namespace

bool VerifyOutcome::ok() const {
    for (const auto& r : reports)
        if (!r.ok()) return false;
    return true;
}

std::string VerifyOutcome::to_string() const {
    std::string s;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        s += r.to_string() + "\n";
        failed += r.ok() ? 0 : 1;
    }
    s += fmt::format("{} check(s), {} failed\n", reports.size(), failed);
    return s;
}

CheckReport compare_groups(const std::string& name, const Chart& a, const Chart& b, const Window& w) {
    CheckReport r{name, {}, {}};
    for (int x = w.x_min; x <= w.x_max; ++x) {
        for (int y = w.y_min; y <= w.y_max; ++y) {
            const FgAbelian& ga = a.group_at({x, y});
            const FgAbelian& gb = b.group_at({x, y});
            if (ga == gb) continue;
            r.violations.push_back({x, y});
            r.details.push_back(fmt::format("({},{}): {} vs {}", x, y, group_text(ga), group_text(gb)));
        }
    }
    return r;
}

VerifyOutcome run_verify(const std::string& scope, const VerifyOptions& opts) {
    bool all = scope == "all";
    if (!all && scope != "gap" && scope != "connectivity" && scope != "cross" && scope != "axes")
        throw UsageError("unknown verify scope '" + scope + "'");
    Computed c{opts, {}, {}, {}};
    VerifyOutcome out;
    if (all || scope == "gap") gap_suite(c, out.reports);
    if (all || scope == "connectivity") connectivity_suite(c, out.reports);
    if (all || scope == "cross") cross_suite(c, out.reports);
    if (all || scope == "axes") axes_suite(c, out.reports);
    return out;
}

}  // namespace roq
