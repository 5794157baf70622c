#include "roq/cells/bredon.hpp"

#include <algorithm>
#include <map>

#include "roq/cells/sphere_complex.hpp"
#include "roq/util/errors.hpp"
#include "roq/util/parallel.hpp"

namespace roq {

namespace {

// Chain degree of the row complex equals the chart x coordinate in both
// variances (cochains sit in negative degrees).
IntComplex row_complex(int b) {
    if (b <= 0) return sphere_complex(-b, Variance::homological, MackeyQ::constant_z()).complex;
    return sphere_complex(b, Variance::cohomological, MackeyQ::constant_z()).complex;
}

struct Row {
    IntComplex complex;
    std::map<int, Subquotient> homology;  // nonzero only
};

Row compute_row(int b, int x_min, int x_max) {
    Row row{row_complex(b), {}};
    int lo = std::max(x_min, row.complex.bottom());
    int hi = std::min(x_max, row.complex.top());
    for (int x = lo; x <= hi; ++x) {
        Subquotient h = row.complex.homology_subquotient(x);
        if (!h.group().is_zero()) row.homology.emplace(x, std::move(h));
    }
    return row;
}

// Chain map in degree x from row b to row b - 1: the inclusion of cells
// for homology rows, restriction to the smaller sphere for cohomology rows.
IntMatrix a_chain_map(const IntComplex& src, const IntComplex& dst, int x) {
    std::size_t rs = src.rank_at(x);
    std::size_t rt = dst.rank_at(x);
    IntMatrix m = IntMatrix::zero(rt, rs);
    for (std::size_t i = 0; i < std::min(rs, rt); ++i) m(i, i) = 1;
    return m;
}

}  // namespace

std::vector<std::pair<Degree, FgAbelian>> bredon_row(int b, int x_min, int x_max) {
    Row row = compute_row(b, x_min, x_max);
    std::vector<std::pair<Degree, FgAbelian>> out;
    for (const auto& [x, h] : row.homology) out.emplace_back(Degree{x, b}, h.group());
    return out;
}

Chart cellular_chart_hz(const Window& window, unsigned threads) {
    if (window.empty()) throw WindowError("cellular_chart_hz: empty window");
    const int nrows = window.y_max - window.y_min + 1;
    std::vector<Row> rows(static_cast<std::size_t>(nrows));
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        rows[i] = compute_row(window.y_min + static_cast<int>(i), window.x_min, window.x_max);
    });

    Chart chart("hz", "cells", window);
    for (int i = 0; i < nrows; ++i) {
        int b = window.y_min + i;
        for (const auto& [x, h] : rows[i].homology) chart.set_entry({x, b}, ChartEntry::bare(h.group()));
    }
    for (int i = 1; i < nrows; ++i) {
        int b = window.y_min + i;
        const Row& src = rows[i];
        const Row& dst = rows[i - 1];
        for (const auto& [x, h] : src.homology) {
            auto it = dst.homology.find(x);
            if (it == dst.homology.end()) continue;
            IntMatrix f = a_chain_map(src.complex, dst.complex, x);
            chart.set_map("a", {x, b}, h.induced_map(f, it->second));
        }
    }
    chart.mark_complete("a");
    return chart;
}

std::vector<std::pair<int, FgAbelian>> join_rp_cohomology(int n) {
    if (n < 0) throw RoqError("join_rp_cohomology: n must be non-negative");
    // S^0 * RP^n is the unreduced suspension of RP^n, so the reduced
    // cohomology is that of RP^n shifted up by one.
    std::vector<std::pair<int, FgAbelian>> out;
    for (int i = 1; 2 * i <= n; ++i) out.emplace_back(2 * i + 1, FgAbelian::cyclic(2));
    if (n % 2 == 1) out.emplace_back(n + 1, FgAbelian::free(1));
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

bool quotient_row_check(int n) {
    auto expected = join_rp_cohomology(n);
    auto row = bredon_row(n + 1, -(n + 2), 0);
    // Row entries sit at x = -k; k = 0 is the fixed-point contribution.
    std::vector<std::pair<int, FgAbelian>> got;
    for (const auto& [d, g] : row)
        if (d.x < 0) got.emplace_back(-d.x, g);
    std::sort(got.begin(), got.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    if (got.size() != expected.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i].first != expected[i].first || !(got[i].second == expected[i].second)) return false;
    return true;
}

FgAbelian quotient_homology(int n, int k) { return homology_at(quotient_sphere_chains(n), k); }

}  // namespace roq
