#include "roq/theories/slice.hpp"

#include "roq/grading/closed_form.hpp"
#include "roq/util/errors.hpp"

namespace roq {

std::pair<int, int> bockstein_box(int xs, int ys) {
    if ((xs + ys) % 2 != 0) throw RoqError("bockstein_box: x_S + y_S must be even");
    return {xs, (xs + ys) / 2};
}

std::pair<int, int> slice_coordinates(int xb, int yb) { return {xb, 2 * yb - xb}; }

SliceEntry slice_entry(const BocksteinResult& bss, int n, int s) {
    SliceEntry e{n, s, {}, {}};
    if ((n + s) % 2 != 0) return e;
    const int k = (n + s) / 2;
    if (k < 0 || k > bss.top_floor) return e;
    const Degree base{k - s, -k};
    e.e1 = closed_form_hz(Window{base.x, base.x, base.y, base.y}).group_at(base);
    e.einf = bss.floor_group(k, Degree{n, 0});
    return e;
}

std::vector<SliceEntry> slice_table(const BocksteinResult& bss, int n_min, int n_max, int s_max) {
    std::vector<SliceEntry> out;
    for (int s = 0; s <= s_max; ++s)
        for (int n = n_min; n <= n_max; ++n)
            if ((n + s) % 2 == 0) out.push_back(slice_entry(bss, n, s));
    return out;
}

std::vector<SliceEntry> blob_diagonal(const BocksteinResult& bss, int n0, int length) {
    std::vector<SliceEntry> out;
    for (int k = 0; k < length; ++k) {
        auto [xs, ys] = slice_coordinates(n0 + k, k);
        out.push_back(slice_entry(bss, xs, ys));
    }
    return out;
}

}  // namespace roq
