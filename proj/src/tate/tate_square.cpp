#include "roq/tate/tate_square.hpp"

#include <optional>

#include <fmt/format.h>

#include "roq/exact/extensions.hpp"
#include "roq/exact/hom.hpp"
#include "roq/util/errors.hpp"

namespace roq {

namespace {

const Degree kA{0, -1};
const Degree kShift{1, 0};

IntMatrix map_at(const DegreeMaps& maps, const Degree& d, std::size_t rows, std::size_t cols) {
    auto it = maps.find(d);
    if (it == maps.end()) return IntMatrix::zero(rows, cols);
    if (it->second.rows() != rows || it->second.cols() != cols)
        throw RoqError("comparison map at " + d.to_string() + " has the wrong shape");
    return it->second;
}

// One leg of a Mayer-Vietoris style sequence: sum of sources -> target.
struct Leg {
    const Chart* chart;
    const DegreeMaps* maps;
    int sign;
};

struct Sequence {
    std::vector<Leg> legs;
    const Chart* target;

    std::vector<FgAbelian> sources(const Degree& d) const {
        std::vector<FgAbelian> out;
        for (const auto& l : legs) out.push_back(l.chart->group_at(d));
        return out;
    }

    IntMatrix matrix(const Degree& d) const {
        const std::size_t rows = target->group_at(d).num_generators();
        IntMatrix m = IntMatrix::zero(rows, 0);
        for (const auto& l : legs) {
            IntMatrix part = map_at(*l.maps, d, rows, l.chart->group_at(d).num_generators());
            m = m.hstack(l.sign < 0 ? -part : part);
        }
        return m;
    }

    Subquotient kernel(const Degree& d) const {
        return Subquotient(Lattice::preimage(matrix(d), relation_lattice({target->group_at(d)})),
                           relation_lattice(sources(d)));
    }

    Subquotient cokernel(const Degree& d) const {
        const FgAbelian& t = target->group_at(d);
        return Subquotient(Lattice::full(t.num_generators()), relation_lattice({t}) + Lattice::span(matrix(d)));
    }

    IntMatrix source_a(const Degree& d) const {
        IntMatrix m = IntMatrix::zero(0, 0);
        for (const auto& l : legs) m = IntMatrix::direct_sum(m, l.chart->mult_map("a", d));
        return m;
    }
};

enum class Part { none, kernel, cokernel, both };

struct Assembled {
    Part part = Part::none;
    FgAbelian group;
    std::optional<Subquotient> ker;
    std::optional<Subquotient> cok;
};

Assembled assemble_at(const Sequence& seq, const Degree& d, const ExtensionResolver& resolver, bool strict) {
    Assembled out;
    out.ker.emplace(seq.kernel(d));
    out.cok.emplace(seq.cokernel(d + kShift));
    const FgAbelian& k = out.ker->group();
    const FgAbelian& c = out.cok->group();
    if (k.is_zero() && c.is_zero()) return out;
    if (c.is_zero()) {
        out.part = Part::kernel;
        out.group = k;
        return out;
    }
    if (k.is_zero()) {
        out.part = Part::cokernel;
        out.group = c;
        return out;
    }
    out.part = Part::both;
    // 0 -> coker -> G -> ker -> 0 splits when the quotient is free.
    std::vector<FgAbelian> cands = possible_extensions(c, k);
    if (k.torsion().empty() || cands.size() == 1) {
        out.group = c + k;
        if (cands.size() == 1) out.group = cands.front();
        return out;
    }
    if (resolver) {
        FgAbelian g = resolver(d, cands);
        bool listed = false;
        for (const auto& cand : cands) listed = listed || cand == g;
        if (!listed)
            throw ExtensionAmbiguityError(fmt::format("resolver chose {} at {}, not an extension of {} by {}",
                                                      g.to_string(), d.to_string(), k.to_string(), c.to_string()));
        out.group = g;
        return out;
    }
    if (strict)
        throw ExtensionAmbiguityError(fmt::format("extension of {} by {} at {} is not determined", k.to_string(),
                                                  c.to_string(), d.to_string()));
    out.group = c + k;
    return out;
}

Chart assemble_chart(const Sequence& seq, const std::string& theory, const std::string& pipeline, const Window& w,
                     const ExtensionResolver& resolver, bool strict, std::vector<Degree>* two_sided) {
    Chart out(theory, pipeline, w);
    std::map<Degree, Assembled> parts;
    for (int x = w.x_min; x <= w.x_max; ++x)
        for (int y = w.y_min; y <= w.y_max; ++y) {
            Degree d{x, y};
            Assembled a = assemble_at(seq, d, resolver, strict);
            if (a.part == Part::none) continue;
            if (a.part == Part::both && two_sided) two_sided->push_back(d);
            out.set_entry(d, ChartEntry::bare(a.group));
            parts.emplace(d, std::move(a));
        }
    // a-maps where both ends come from one side of the sequence.
    for (const auto& [d, src] : parts) {
        const Degree dt = d + kA;
        auto it = parts.find(dt);
        if (it == parts.end()) continue;
        const Assembled& dst = it->second;
        if (src.part == Part::kernel && dst.part == Part::kernel) {
            out.set_map("a", d, src.ker->induced_map(seq.source_a(d), *dst.ker));
        } else if (src.part == Part::cokernel && dst.part == Part::cokernel) {
            out.set_map("a", d, src.cok->induced_map(seq.target->mult_map("a", d + kShift), *dst.cok));
        } else if (src.part == Part::cokernel && dst.part == Part::kernel) {
            out.set_map("a", d, IntMatrix::zero(dst.group.num_generators(), src.group.num_generators()));
        }
    }
    return out;
}

}  // namespace

Localization invert_a(const Chart& c, int stable_steps) {
    const Window& w = c.window();
    if (w.empty()) return {Chart(c.theory(), "tate", w), {}};
    if (stable_steps < 1 || w.y_max - w.y_min < stable_steps)
        throw WindowError(fmt::format("invert_a: window {} too short for {} stabilisation steps", w.to_string(),
                                      stable_steps));
    Localization out{Chart(c.theory(), "tate", w), {}};
    for (int x = w.x_min; x <= w.x_max; ++x) {
        for (int k = 1; k <= stable_steps; ++k) {
            Degree d{x, w.y_min + k};
            if (!is_isomorphism(c.mult_map("a", d), c.group_at(d), c.group_at(d + kA)))
                throw InstabilityError(fmt::format("a-column at x = {} does not stabilise: a is not an "
                                                   "isomorphism from {}",
                                                   x, d.to_string()));
        }
        const FgAbelian g = c.group_at({x, w.y_min});
        if (g.is_zero()) continue;
        IntMatrix composite = IntMatrix::identity(g.num_generators());
        for (int y = w.y_min; y <= w.y_max; ++y) {
            Degree d{x, y};
            if (y > w.y_min) composite = reduce_to_target(composite * c.mult_map("a", d), g);
            out.tate.set_entry(d, ChartEntry::bare(g));
            if (!c.group_at(d).is_zero()) out.map.emplace(d, composite);
            if (y > w.y_min) out.tate.set_map("a", d, IntMatrix::identity(g.num_generators()));
        }
    }
    out.tate.mark_complete("a");
    return out;
}

Chart homotopy_orbits(const Chart& hfp, const Chart& tate, const DegreeMaps& loc, const ExtensionResolver& resolver,
                      std::vector<Degree>* two_sided) {
    Window w = tate.window();
    w.x_max -= 1;
    Sequence seq{{{&hfp, &loc, 1}}, &tate};
    return assemble_chart(seq, hfp.theory(), "orbits", w, resolver, false, two_sided);
}

ConnectiveCover geometric_fixed_points(const Chart& tate) {
    const Window& w = tate.window();
    ConnectiveCover out{Chart(tate.theory(), "phi", w), {}};
    for (int x = w.x_min; x <= w.x_max; ++x) {
        const FgAbelian g = tate.group_at({x, w.y_min});
        for (int y = w.y_min; y <= w.y_max; ++y) {
            Degree d{x, y};
            if (!(tate.group_at(d) == g))
                throw RoqError("geometric_fixed_points: input is not a-periodic at " + d.to_string());
            if (x < 0 || g.is_zero()) continue;
            IntMatrix id = IntMatrix::identity(g.num_generators());
            out.phi.set_entry(d, ChartEntry::bare(g));
            out.map.emplace(d, id);
            if (y > w.y_min) out.phi.set_map("a", d, id);
        }
    }
    out.phi.mark_complete("a");
    return out;
}

Chart assemble_genuine(const TateSquareData& data, const Window& w, const ExtensionResolver& resolver,
                       std::vector<Degree>* two_sided) {
    for (const Chart* c : {&data.hfp, &data.tate, &data.phi}) {
        const Window& cw = c->window();
        if (!cw.contains(Degree{w.x_min, w.y_min}) || !cw.contains(Degree{w.x_max + 1, w.y_max}))
            throw WindowError("assemble_genuine: " + c->pipeline() + " chart does not cover " + w.to_string());
    }
    Sequence seq{{{&data.hfp, &data.localization, 1}, {&data.phi, &data.inclusion, -1}}, &data.tate};
    return assemble_chart(seq, data.hfp.theory(), "tate", w, resolver, true, two_sided);
}

TateSquareData run_tate_square(const Chart& hfp, const Window& w, const ExtensionResolver& resolver) {
    TateSquareData data;
    data.hfp = hfp;
    Localization loc = invert_a(hfp);
    data.tate = std::move(loc.tate);
    data.localization = std::move(loc.map);
    data.orbits = homotopy_orbits(data.hfp, data.tate, data.localization, {}, &data.orbit_extensions);
    ConnectiveCover cover = geometric_fixed_points(data.tate);
    data.phi = std::move(cover.phi);
    data.inclusion = std::move(cover.map);
    data.genuine = assemble_genuine(data, w, resolver, &data.genuine_extensions);
    return data;
}

ExtensionResolver chart_resolver(const Chart& reference) {
    return [reference](const Degree& d, const std::vector<FgAbelian>&) { return reference.group_at(d); };
}

}  // namespace roq
