#include "roq/io/render.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "roq/util/errors.hpp"

namespace roq {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 2;  // cells

struct Glyph {
    Annotation kind;
    bool odd_torsion = false;  // cyclic of order other than 2
};

std::vector<Glyph> glyphs(const ChartEntry& e) {
    std::vector<Glyph> out;
    if (e.labeled()) {
        for (const auto& g : e.gens) out.push_back({g.annotation});
        // labels cover the free part and the Z/2's; anything else is extra
        for (const auto& t : e.group.torsion())
            if (t != 2) out.push_back({Annotation::dot, true});
        return out;
    }
    for (std::size_t i = 0; i < e.group.rank(); ++i) out.push_back({Annotation::square});
    for (const auto& t : e.group.torsion()) out.push_back({Annotation::dot, t != 2});
    return out;
}

}  // namespace

RenderFormat parse_render_format(const std::string& name) {
    if (name == "svg") return RenderFormat::svg;
    if (name == "text") return RenderFormat::text;
    throw UsageError("unknown render format '" + name + "'");
}

std::string render_svg(const Chart& c) {
    const Window& w = c.window();
    int cols = w.x_max - w.x_min + 1;
    int rows = w.y_max - w.y_min + 1;
    int width = (cols + 2 * kMargin) * kCell;
    int height = (rows + 2 * kMargin) * kCell;
    auto cx = [&](int x) { return (x - w.x_min + kMargin) * kCell + kCell / 2; };
    auto cy = [&](int y) { return (w.y_max - y + kMargin) * kCell + kCell / 2; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
        "viewBox=\"0 0 {} {}\">\n",
        width, height, width, height);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" font-family=\"monospace\">{} ({}) {}</text>\n",
                       kCell / 2, kCell - 6, c.theory(), c.pipeline(), w.to_string());

    // axes through the origin, clamped to the window edge
    int ax = w.empty() ? 0 : std::clamp(0, w.x_min, w.x_max);
    int ay = w.empty() ? 0 : std::clamp(0, w.y_min, w.y_max);
    int left = cx(w.x_min) - kCell / 2, right = cx(w.x_max) + kCell / 2;
    int top = cy(w.y_max) - kCell / 2, bottom = cy(w.y_min) + kCell / 2;
    out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-width=\"1\"/>\n", left,
                       cy(ay), right, cy(ay));
    out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-width=\"1\"/>\n", cx(ax),
                       top, cx(ax), bottom);
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" font-family=\"serif\">Z·1</text>\n", right + 4,
                       cy(ay) + 4);
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" font-family=\"serif\">Z·σ</text>\n", cx(ax) - 10,
                       top - 6);
    for (int x = w.x_min; x <= w.x_max; ++x)
        if (x % 2 == 0)
            out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"8\" font-family=\"monospace\">{}</text>\n",
                               cx(x) - 4, bottom + 10, x);
    for (int y = w.y_min; y <= w.y_max; ++y)
        if (y % 2 == 0)
            out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"8\" font-family=\"monospace\">{}</text>\n",
                               left - 16, cy(y) + 3, y);

    // structure maps first so glyphs sit on top
    for (const auto& [key, m] : c.maps()) {
        if (m.is_zero()) continue;
        Degree t = key.second + map_degree(key.first);
        out += fmt::format(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"1\"/>\n", cx(key.second.x),
            cy(key.second.y), cx(t.x), cy(t.y), key.first == "a" ? "black" : "steelblue");
    }

    for (const auto& [d, e] : c.entries()) {
        auto gs = glyphs(e);
        int n = static_cast<int>(gs.size());
        for (int i = 0; i < n; ++i) {
            int px = cx(d.x) + (i - (n - 1) / 2) * 5 - ((n - 1) % 2) * 2;
            int py = cy(d.y);
            const Glyph& g = gs[i];
            if (g.kind == Annotation::square) {
                out += fmt::format(
                    "<rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"white\" stroke=\"black\"/>\n", px - 5,
                    py - 5);
            } else if (g.kind == Annotation::circle) {
                out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n", px, py);
            } else {
                out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n", px, py,
                                   g.odd_torsion ? "black" : "red");
            }
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_text(const Chart& c) {
    const Window& w = c.window();
    std::string out = fmt::format("{} ({}) {}\n", c.theory(), c.pipeline(), w.to_string());
    out += "      Z·σ\n";
    for (int y = w.y_max; y >= w.y_min; --y) {
        std::string row = fmt::format("{:>5} ", y);
        for (int x = w.x_min; x <= w.x_max; ++x) {
            const ChartEntry* e = c.entry_at({x, y});
            if (!e) {
                row += (x == 0 && y == 0) ? "+" : x == 0 ? "|" : y == 0 ? "-" : " ";
                continue;
            }
            auto gs = glyphs(*e);
            if (gs.size() == 1) {
                const Glyph& g = gs[0];
                row += g.kind == Annotation::square ? "□"
                       : g.kind == Annotation::circle ? "○"
                       : g.odd_torsion             ? "◇"
                                                   : "·";
            } else {
                row += gs.size() <= 9 ? std::to_string(gs.size()) : "#";
            }
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + "\n";
    }
    std::string ticks(6, ' ');
    for (int x = w.x_min; x <= w.x_max; ++x) ticks += (x % 4 == 0) ? "^" : " ";
    while (!ticks.empty() && ticks.back() == ' ') ticks.pop_back();
    out += ticks + "  Z·1\n";
    out += fmt::format("      x from {} to {}, ticks at multiples of 4\n", w.x_min, w.x_max);
    return out;
}

std::string render(const Chart& c, RenderFormat f) {
    return f == RenderFormat::svg ? render_svg(c) : render_text(c);
}

}  // namespace roq
