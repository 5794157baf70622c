#include "roq/grading/degree.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "roq/util/errors.hpp"

namespace roq {

std::string Degree::to_string() const { return fmt::format("({},{})", x, y); }

Window Window::intersect(const Window& o) const {
    return {std::max(x_min, o.x_min), std::min(x_max, o.x_max), std::max(y_min, o.y_min), std::min(y_max, o.y_max)};
}

Window Window::hull(const Window& o) const {
    if (empty()) return o;
    if (o.empty()) return *this;
    return {std::min(x_min, o.x_min), std::max(x_max, o.x_max), std::min(y_min, o.y_min), std::max(y_max, o.y_max)};
}

std::string Window::to_string() const { return fmt::format("{}..{},{}..{}", x_min, x_max, y_min, y_max); }

namespace {

std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) throw ParseError("range '" + text + "' is not of the form a..b");
    try {
        std::size_t used = 0;
        std::string lo = text.substr(0, pos), hi = text.substr(pos + 2);
        int a = std::stoi(lo, &used);
        if (used != lo.size()) throw ParseError("bad range bound '" + lo + "'");
        int b = std::stoi(hi, &used);
        if (used != hi.size()) throw ParseError("bad range bound '" + hi + "'");
        return {a, b};
    } catch (const std::logic_error&) {
        throw ParseError("bad range '" + text + "'");
    }
}

}  // namespace

Window Window::parse(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        auto [lo, hi] = parse_range(text);
        return {lo, hi, lo, hi};
    }
    auto [x0, x1] = parse_range(text.substr(0, comma));
    auto [y0, y1] = parse_range(text.substr(comma + 1));
    return {x0, x1, y0, y1};
}

}  // namespace roq
