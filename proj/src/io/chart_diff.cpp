#include "roq/io/chart_diff.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

namespace roq {

namespace {

bool nearer(const Degree& a, const Degree& b) {
    int da = std::abs(a.x) + std::abs(a.y), db = std::abs(b.x) + std::abs(b.y);
    if (da != db) return da < db;
    return a < b;
}

std::string label_text(const ChartEntry* e) {
    if (!e) return "0";
    std::string s;
    for (const auto& g : e->gens) s += (s.empty() ? "" : " ") + g.name.text() + ":" + annotation_token(g.annotation);
    return s;
}

}  // namespace

ChartDiff diff_charts(const Chart& a, const Chart& b) {
    ChartDiff out;
    out.compared = a.window().intersect(b.window());
    if (!(a.window() == b.window()))
        out.warning = fmt::format("windows differ ({} vs {}); comparing on {}", a.window().to_string(),
                                  b.window().to_string(), out.compared.to_string());
    std::vector<Degree> support;
    for (const auto* c : {&a, &b})
        for (const auto& [d, e] : c->entries())
            if (out.compared.contains(d)) support.push_back(d);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (const auto& d : support) {
        const ChartEntry* ea = a.entry_at(d);
        const ChartEntry* eb = b.entry_at(d);
        FgAbelian ga = ea ? ea->group : FgAbelian();
        FgAbelian gb = eb ? eb->group : FgAbelian();
        if (!(ga == gb)) {
            out.groups.push_back({d, ga, gb});
        } else if (ea->labeled() && eb->labeled() && !(ea->gens == eb->gens)) {
            out.labels.push_back({d, label_text(ea), label_text(eb)});
        }
    }
    std::sort(out.groups.begin(), out.groups.end(),
              [](const auto& p, const auto& q) { return nearer(p.degree, q.degree); });
    std::sort(out.labels.begin(), out.labels.end(),
              [](const auto& p, const auto& q) { return nearer(p.degree, q.degree); });
    return out;
}

std::string ChartDiff::to_string() const {
    std::string s;
    if (!warning.empty()) s += "warning: " + warning + "\n";
    s += fmt::format("compared window {}: {} group difference(s), {} label difference(s)\n", compared.to_string(),
                     groups.size(), labels.size());
    for (const auto& g : groups)
        s += fmt::format("group {}: {} vs {}\n", g.degree.to_string(), g.left.to_string(), g.right.to_string());
    for (const auto& l : labels) s += fmt::format("labels {}: {} vs {}\n", l.degree.to_string(), l.left, l.right);
    return s;
}

}  // namespace roq
