#include "roq/theories/bockstein.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <fmt/format.h>

#include "roq/exact/extensions.hpp"
#include "roq/exact/hom.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/theories/theta.hpp"
#include "roq/util/errors.hpp"

namespace roq {

namespace {

const Degree kRhoStep{1, 1};

// E2 of the theta complex at one HZ degree on a floor above 0 (with
// incoming theta) or on floor 0 (cycles only).
struct ThetaHomology {
    std::optional<Subquotient> upper;
    std::optional<Subquotient> bottom;
};

Subquotient theta_homology(const Chart& c, const Degree& d, bool with_incoming) {
    const FgAbelian g = c.group_at(d);
    const FgAbelian t = c.group_at(d + kThetaDegree);
    Lattice cycles = Lattice::preimage(theta_matrix(c, d), relation_lattice({t}));
    Lattice bounds = relation_lattice({g});
    if (with_incoming) {
        const Degree src = d - kThetaDegree;
        if (c.nonzero(src)) bounds = bounds + Lattice::span(theta_matrix(c, src));
    }
    return Subquotient(cycles, bounds);
}

bool is_circle(const Subquotient& sq) {
    if (!(sq.group() == FgAbelian::free(1))) return false;
    Integer g = 0;
    for (const auto& v : sq.generator(0)) g = gcd(g, v);
    return g == 2;
}

}  // namespace

FgAbelian BocksteinResult::floor_group(int s, const Degree& d) const {
    for (const auto& f : floors)
        if (f.floor == s && f.total() == d) return f.group;
    return {};
}

BocksteinResult run_bockstein_on(const std::function<Chart(const Window&)>& base, const Window& w, int padding,
                                 const ExtensionResolver& resolver, const std::string& theory) {
    if (w.empty()) throw WindowError("run_bockstein: empty window");
    BocksteinResult out;
    out.top_floor = std::max(0, w.x_max + w.y_max + padding);
    const int top = out.top_floor;
    // Totals are read on w padded by one (targets of differentials); theta
    // needs two more columns on each side.
    const Window tw = w.padded(1);
    Window bw{tw.x_min - top - 3, tw.x_max + 3, tw.y_min - top - 2, tw.y_max + 2};
    const Chart hz = base(bw);

    std::map<Degree, ThetaHomology> cache;
    auto homology = [&](const Degree& alpha, int s) -> const Subquotient& {
        ThetaHomology& h = cache[alpha];
        auto& slot = s == 0 ? h.bottom : h.upper;
        if (!slot) slot.emplace(theta_homology(hz, alpha, s > 0));
        return *slot;
    };

    // E2, keyed by total degree then floor.
    std::map<Degree, std::map<int, const Subquotient*>> e2;
    for (int s = 0; s <= top; ++s)
        for (int x = tw.x_min; x <= tw.x_max; ++x)
            for (int y = tw.y_min; y <= tw.y_max; ++y) {
                const Degree total{x, y};
                const Degree alpha = total - kRhoStep * s;
                if (!hz.nonzero(alpha)) continue;
                const Subquotient& sq = homology(alpha, s);
                if (!sq.group().is_zero()) e2[total][s] = &sq;
            }

    // d^r, r >= 2: floor s at total d to floor s + r at total d - (1,0).
    for (const auto& [total, by_floor] : e2) {
        if (!w.contains(total) && !w.contains(total - Degree{1, 0})) continue;
        auto it = e2.find(total - Degree{1, 0});
        if (it == e2.end()) continue;
        for (const auto& [s, sq] : by_floor)
            for (const auto& [s2, sq2] : it->second) {
                if (s2 < s + 2) continue;
                ++out.higher_pairs_checked;
                if (hom_nonzero(sq->group(), sq2->group()))
                    throw DifferentialError(fmt::format("possible d{} from floor {} at {} to floor {} at {} ({} -> {})",
                                                        s2 - s, s, total.to_string(), s2,
                                                        (total - Degree{1, 0}).to_string(), sq->group().to_string(),
                                                        sq2->group().to_string()));
            }
    }

    out.chart = Chart(theory, "bockstein", w);
    for (const auto& [total, by_floor] : e2) {
        if (!w.contains(total)) continue;
        std::vector<FgAbelian> pieces;  // highest floor (deepest submodule) first
        for (auto it = by_floor.rbegin(); it != by_floor.rend(); ++it) {
            pieces.push_back(it->second->group());
            out.floors.push_back({it->first, total - kRhoStep * it->first, it->second->group(), is_circle(*it->second)});
        }
        FgAbelian g = pieces.front();
        if (pieces.size() > 1) {
            out.multi_floor.push_back(total);
            auto cands = filtered_candidates(pieces);
            if (cands.size() == 1) {
                g = cands.front();
            } else if (resolver) {
                g = resolver(total, cands);
                if (std::find(cands.begin(), cands.end(), g) == cands.end())
                    throw ExtensionAmbiguityError(fmt::format("resolver chose {} at {}, which has no filtration "
                                                              "with the E-infinity floors",
                                                              g.to_string(), total.to_string()));
                out.resolved.push_back(total);
            } else {
                throw ExtensionAmbiguityError("extension across floors at " + total.to_string() +
                                              " is not determined");
            }
        }
        out.chart.set_entry(total, ChartEntry::bare(g));
    }
    std::sort(out.floors.begin(), out.floors.end(), [](const FloorEntry& l, const FloorEntry& r) {
        return std::pair(l.total(), l.floor) < std::pair(r.total(), r.floor);
    });

    // a acts within a floor and commutes with theta.
    for (const auto& [total, by_floor] : e2) {
        const Degree tt = total + Degree{0, -1};
        if (!w.contains(total) || !w.contains(tt) || by_floor.size() != 1) continue;
        auto it = e2.find(tt);
        if (it == e2.end() || it->second.size() != 1) continue;
        const auto& [s, sq] = *by_floor.begin();
        const auto& [s2, sq2] = *it->second.begin();
        if (s != s2) continue;
        const Degree alpha = total - kRhoStep * s;
        out.chart.set_map("a", total, sq->induced_map(hz.mult_map("a", alpha), *sq2));
    }
    return out;
}

BocksteinResult run_bockstein(const Window& w, int padding, const ExtensionResolver& resolver) {
    return run_bockstein_on(closed_form_hz, w, padding, resolver, "kr");
}

BocksteinResult run_bockstein_phi(const Window& w, int padding) {
    return run_bockstein_on(closed_form_hz_phi, w, padding, {}, "kr-phi");
}

std::vector<Degree> theta_law_violations(const Chart& c) {
    std::vector<Degree> bad;
    for (const auto& [d, e] : c.entries()) {
        const Degree t = d + kThetaDegree;
        const Degree t2 = t + kThetaDegree;
        bool ok = true;
        for (const auto& g : e.gens) {
            auto img = theta_rule(g.name);
            if (!img) continue;
            if (c.window().contains(t) && c.nonzero(t) && img->degree() != t) ok = false;
        }
        if (ok && c.window().contains(t2) && c.nonzero(t) && c.nonzero(t2)) {
            IntMatrix sq = theta_matrix(c, t) * theta_matrix(c, d);
            ok = reduce_to_target(sq, c.group_at(t2)).is_zero();
        }
        if (!ok) bad.push_back(d);
    }
    return bad;
}

}  // namespace roq
