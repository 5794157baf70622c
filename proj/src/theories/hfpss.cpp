#include "roq/theories/hfpss.hpp"

#include <algorithm>

#include "roq/specseq/page.hpp"
#include "roq/util/errors.hpp"

namespace roq {

Window hfp_window(const Window& w, int padding) {
    Window p = w.padded(padding);
    // Three rows below the antidiagonal of the rightmost column.
    p.y_min = std::min(p.y_min, -p.x_max - 3);
    return p;
}

HfpssResult run_hfpss(const TheorySeed& seed, const Window& w, const HfpssOptions& opts) {
    const Window hw = hfp_window(w, opts.padding);
    Page page = Page::from_presentation(seed.alphabet, PageWindow::around(hw, 1, seed.reach()));
    HfpssResult out;
    for (const auto& d : seed.differentials) {
        while (page.number() < d.r) page = page.turn_trivial();
        page = page.turn(d, opts.threads);
        out.pages.emplace(d.r + 1, page.to_chart(hw, {}, seed.name, "hfp-page"));
    }
    out.collapse_page = page.number();
    out.hfp = collapse_to_chart(page, hw, seed.multipliers, seed.name, "hfp", &out.multi_filtration);
    return out;
}

}  // namespace roq
