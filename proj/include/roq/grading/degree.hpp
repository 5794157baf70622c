#pragma once

#include <compare>
#include <string>

namespace roq {

// x + y*sigma in RO(Q), drawn at cartesian (x, y).
struct Degree {
    int x = 0;
    int y = 0;

    Degree operator+(const Degree& o) const { return {x + o.x, y + o.y}; }
    Degree operator-(const Degree& o) const { return {x - o.x, y - o.y}; }
    Degree operator*(int k) const { return {k * x, k * y}; }
    auto operator<=>(const Degree&) const = default;

    std::string to_string() const;
};

inline constexpr Degree kSigma{0, 1};
inline constexpr Degree kRho{1, 1};

// Closed rectangle [x_min, x_max] x [y_min, y_max]; empty when a bound is
// inverted.
struct Window {
    int x_min = 0;
    int x_max = -1;
    int y_min = 0;
    int y_max = -1;

    static Window square(int lo, int hi) { return {lo, hi, lo, hi}; }
    bool empty() const { return x_min > x_max || y_min > y_max; }
    bool contains(const Degree& d) const {
        return d.x >= x_min && d.x <= x_max && d.y >= y_min && d.y <= y_max;
    }
    bool contains(const Window& w) const {
        return w.empty() || (w.x_min >= x_min && w.x_max <= x_max && w.y_min >= y_min && w.y_max <= y_max);
    }
    Window padded(int p) const { return {x_min - p, x_max + p, y_min - p, y_max + p}; }
    Window padded(int px, int py) const { return {x_min - px, x_max + px, y_min - py, y_max + py}; }
    Window intersect(const Window& o) const;
    Window hull(const Window& o) const;
    bool operator==(const Window&) const = default;

    // "a..b,c..d"
    std::string to_string() const;
    // Accepts "a..b" (square) or "a..b,c..d".
    static Window parse(const std::string& text);
};

}  // namespace roq
