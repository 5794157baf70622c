#include "roq/grading/closed_form.hpp"

#include <functional>
#include <optional>

#include "roq/util/errors.hpp"

namespace roq {

namespace {

using S = Symbol;

struct Image {
    GeneratorName name;
    int coefficient = 1;
};

using MultRule = std::function<std::optional<Image>(const GeneratorName&)>;

GeneratorName mono(std::initializer_list<std::pair<S, int>> factors, int coefficient = 1) {
    std::array<int, kNumSymbols> e{};
    for (auto [s, k] : factors) e[static_cast<std::size_t>(s)] += k;
    return GeneratorName::monomial(e, coefficient);
}

int ex(const GeneratorName& g, S s) { return g.exponent(s); }

void put(Chart& c, const GeneratorName& g, Annotation a) {
    Degree d = g.degree();
    if (!c.window().contains(d)) return;
    FgAbelian grp = a == Annotation::dot ? FgAbelian::cyclic(2) : FgAbelian::free(1);
    c.add_summand(d, grp, {{g, a}});
}

// Fills the matrices of `name` from the rule on generator labels.
void fill_maps(Chart& c, const std::string& name, const MultRule& rule) {
    Degree shift = map_degree(name);
    for (const auto& [d, e] : c.entries()) {
        Degree t = d + shift;
        const ChartEntry* te = c.entry_at(t);
        if (!c.window().contains(t) || te == nullptr) continue;
        IntMatrix m(te->gens.size(), e.gens.size());
        for (std::size_t j = 0; j < e.gens.size(); ++j) {
            auto img = rule(e.gens[j].name);
            if (!img) continue;
            bool found = false;
            for (std::size_t i = 0; i < te->gens.size(); ++i)
                if (te->gens[i].name == img->name) {
                    m(i, j) = img->coefficient;
                    found = true;
                }
            if (!found)
                throw RoqError("closed form: " + name + "*" + e.gens[j].name.text() + " names " + img->name.text() +
                               " which is not in the chart at " + t.to_string());
        }
        if (!m.is_zero()) c.set_map(name, d, m);
    }
    c.mark_complete(name);
}

// ---------------------------------------------------------------- HZ

bool hz_exists(const GeneratorName& g) {
    if (g.kind() == GeneratorName::Kind::tower) return g.tower_j() >= 1 && g.tower_y() >= 2 * g.tower_j() + 1;
    if (g.kind() != GeneratorName::Kind::monomial) return false;
    int k = ex(g, S::a), j = ex(g, S::u);
    if (g.coefficient() == 1) return k >= 0 && j >= 0;
    if (g.coefficient() == 2) return k == 0 && j <= -1;
    return false;
}

std::optional<Image> hz_times_a(const GeneratorName& g) {
    if (g.kind() == GeneratorName::Kind::tower) {
        if (g.tower_y() - 1 >= 2 * g.tower_j() + 1) return Image{GeneratorName::tower(g.tower_j(), g.tower_y() - 1)};
        return std::nullopt;
    }
    if (g.coefficient() != 1) return std::nullopt;
    return Image{g * GeneratorName::of(S::a)};
}

std::optional<Image> hz_times_u(const GeneratorName& g) {
    if (g.kind() == GeneratorName::Kind::tower) {
        if (g.tower_j() >= 2) return Image{GeneratorName::tower(g.tower_j() - 1, g.tower_y() - 2)};
        return std::nullopt;
    }
    if (g.coefficient() == 2) {
        int j = -ex(g, S::u);
        if (j == 1) return Image{GeneratorName::one(), 2};
        return Image{mono({{S::u, -(j - 1)}}, 2)};
    }
    return Image{g * GeneratorName::of(S::u)};
}

// ---------------------------------------------------------------- kR

// a^i vbar^m U^k with coefficient c.
bool kr_mono_exists(int c, int i, int m, int k) {
    if (i < 0 || m < 0) return false;
    if (k >= 0) {
        if (c != 1) return false;
        return m == 0 || i <= 2;
    }
    if (m == 0) return c == 2 && i == 0;
    return c == 1 && i <= 2;
}

bool is_twou(const GeneratorName& g) {
    return g.kind() == GeneratorName::Kind::monomial && g.coefficient() == 2 && ex(g, S::u) == 1;
}

std::optional<Image> kr_times_a(const GeneratorName& g) {
    if (g.kind() == GeneratorName::Kind::tower) return hz_times_a(g);
    if (is_twou(g) || g.coefficient() != 1) return std::nullopt;
    int i = ex(g, S::a), m = ex(g, S::vbar), k = ex(g, S::U);
    if (!kr_mono_exists(1, i + 1, m, k)) return std::nullopt;
    return Image{g * GeneratorName::of(S::a)};
}

std::optional<Image> kr_times_vbar(const GeneratorName& g) {
    if (g.kind() == GeneratorName::Kind::tower) return std::nullopt;
    if (is_twou(g)) return Image{g * GeneratorName::of(S::vbar)};
    int i = ex(g, S::a), m = ex(g, S::vbar), k = ex(g, S::U);
    if (g.coefficient() == 2) return Image{mono({{S::vbar, 1}, {S::U, k}}), 2};
    if (!kr_mono_exists(1, i, m + 1, k)) return std::nullopt;
    return Image{g * GeneratorName::of(S::vbar)};
}

std::optional<Image> kr_times_U(const GeneratorName& g) {
    if (g.kind() == GeneratorName::Kind::tower) {
        if (g.tower_j() - 2 >= 2) return Image{GeneratorName::tower(g.tower_j() - 2, g.tower_y() - 4)};
        return std::nullopt;
    }
    if (is_twou(g)) return Image{g * GeneratorName::of(S::U)};
    int i = ex(g, S::a), m = ex(g, S::vbar), k = ex(g, S::U);
    if (g.coefficient() == 2) {
        if (k + 1 == 0) return Image{GeneratorName::one(), 2};
        return Image{mono({{S::U, k + 1}}, 2)};
    }
    if (!kr_mono_exists(1, i, m, k + 1)) return std::nullopt;
    return Image{g * GeneratorName::of(S::U)};
}

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Chart closed_form_hz(const Window& w) {
    Chart c("hz", "closed", w);
    if (w.empty()) return c;
    for (int x = w.x_min; x <= w.x_max; ++x)
        for (int y = w.y_min; y <= w.y_max; ++y) {
            if (x % 2 == 0 && x >= 0) {
                int j = x / 2;
                if (y == -2 * j) put(c, mono({{S::u, j}}), Annotation::square);
                if (y < -2 * j) put(c, mono({{S::a, -2 * j - y}, {S::u, j}}), Annotation::dot);
            } else if (x % 2 == 0 && x < 0) {
                int j = -x / 2;
                if (y == 2 * j) put(c, mono({{S::u, -j}}, 2), Annotation::circle);
            } else if (x <= -3) {
                int j = (-x - 1) / 2;
                if (y >= 2 * j + 1) put(c, GeneratorName::tower(j, y), Annotation::dot);
            }
        }
    fill_maps(c, "a", hz_times_a);
    fill_maps(c, "u", hz_times_u);
    return c;
}

Chart closed_form_kr(const Window& w) {
    Chart c("kr", "closed", w);
    if (w.empty()) return c;
    int k_lo = floor_div(w.x_min, 4) - 1;
    int k_hi = floor_div(w.x_max, 4) + 1;
    for (int k = k_lo; k <= k_hi; ++k) {
        // a^i vbar^m U^k
        for (int m = 0; 4 * k + m <= w.x_max; ++m) {
            int x = 4 * k + m;
            if (x < w.x_min) continue;
            for (int i = 0; -4 * k + m - i >= w.y_min; ++i) {
                if (-4 * k + m - i > w.y_max) continue;
                if (kr_mono_exists(1, i, m, k)) {
                    Annotation a = i == 0 ? Annotation::square : Annotation::dot;
                    put(c, mono({{S::a, i}, {S::vbar, m}, {S::U, k}}), a);
                } else if (kr_mono_exists(2, i, m, k)) {
                    put(c, mono({{S::U, k}}, 2), Annotation::circle);
                }
                if (m > 0 && i >= 2) break;
            }
        }
        // 2u vbar^m U^k
        for (int m = 0; 4 * k + 2 + m <= w.x_max; ++m)
            put(c, mono({{S::u, 1}, {S::vbar, m}, {S::U, k}}, 2), Annotation::circle);
        // dual a-tower below the negative blocks
        if (k < 0) {
            int j = -2 * k;
            int x = 4 * k - 1;
            if (x >= w.x_min && x <= w.x_max)
                for (int y = std::max(2 * j + 1, w.y_min); y <= w.y_max; ++y)
                    put(c, GeneratorName::tower(j, y), Annotation::dot);
        }
    }
    fill_maps(c, "a", kr_times_a);
    fill_maps(c, "vbar", kr_times_vbar);
    fill_maps(c, "U", kr_times_U);
    return c;
}

Chart closed_form_hz_phi(const Window& w) {
    Chart c("hz", "phi-closed", w);
    if (w.empty()) return c;
    for (int x = std::max(0, w.x_min); x <= w.x_max; ++x) {
        if (x % 2 != 0) continue;
        int j = x / 2;
        for (int y = w.y_min; y <= w.y_max; ++y) put(c, mono({{S::a, -2 * j - y}, {S::u, j}}), Annotation::dot);
    }
    auto times = [](S s) {
        return [s](const GeneratorName& g) -> std::optional<Image> { return Image{g * GeneratorName::of(s)}; };
    };
    fill_maps(c, "a", times(S::a));
    fill_maps(c, "u", times(S::u));
    return c;
}

bool hz_generator_exists(const GeneratorName& g) { return hz_exists(g); }

}  // namespace roq
