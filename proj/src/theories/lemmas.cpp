#include "roq/theories/lemmas.hpp"

#include <boost/algorithm/string/case_conv.hpp>
#include <fmt/format.h>

#include "roq/exact/hom.hpp"
#include "roq/util/errors.hpp"

namespace roq {

std::string CheckReport::to_string() const {
    if (ok()) return name + ": pass";
    std::string out = fmt::format("{}: {} violation(s)", name, violations.size());
    for (const auto& d : details) out += "\n  " + d;
    return out;
}

int underlying_rank(const std::string& theory, int k) {
    const std::string t = boost::to_lower_copy(theory);
    if (k < 0) return 0;
    if (t == "hz") return k == 0 ? 1 : 0;
    if (t == "kr") return 1;
    throw UnsupportedError("no underlying ranks for theory " + theory);
}

CheckReport gap_check(const Chart& c) {
    CheckReport r{"gap", {}, {}};
    const Window& w = c.window();
    for (const auto& [d, e] : c.entries()) {
        const int diag = d.x - d.y;
        if (diag <= -1 && diag >= -3) {
            r.violations.push_back(d);
            r.details.push_back(fmt::format("{} = {} on the diagonal k rho - {}", d.to_string(), e.group.to_string(), -diag));
        }
    }
    for (int k = std::max(w.x_min, w.y_min); k <= std::min(w.x_max, w.y_max); ++k) {
        const Degree d{k, k};
        const FgAbelian& g = c.group_at(d);
        const int want = underlying_rank(c.theory(), k);
        if (!g.torsion().empty() || g.rank() != static_cast<std::size_t>(want)) {
            r.violations.push_back(d);
            r.details.push_back(fmt::format("{} = {}, strongly even needs Z^{}", d.to_string(), g.to_string(), want));
        }
    }
    return r;
}

CheckReport connectivity_check(const Chart& c) {
    CheckReport r{"connectivity", {}, {}};
    const Window& w = c.window();
    for (int x = w.x_min; x <= w.x_max; ++x)
        for (int y = w.y_min; y <= w.y_max && x + y < 0; ++y) {
            const Degree d{x, y};
            if (x < 0) {
                if (c.nonzero(d)) {
                    r.violations.push_back(d);
                    r.details.push_back(fmt::format("{} = {} below the antidiagonal", d.to_string(),
                                                    c.group_at(d).to_string()));
                }
                continue;
            }
            const Degree t{x, y - 1};
            if (!w.contains(t)) continue;
            try {
                if (!is_isomorphism(c.mult_map("a", d), c.group_at(d), c.group_at(t))) {
                    r.violations.push_back(d);
                    r.details.push_back(fmt::format("a: {} -> {} is not an isomorphism", d.to_string(), t.to_string()));
                }
            } catch (const MissingMapError&) {
                r.violations.push_back(d);
                r.details.push_back(fmt::format("a is not known at {}", d.to_string()));
            }
        }
    return r;
}

}  // namespace roq
