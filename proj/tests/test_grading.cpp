#include "doctest.h"

#include "roq/exact/hom.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/util/errors.hpp"

using namespace roq;

namespace {

const FgAbelian Z = FgAbelian::free(1);
const FgAbelian F2 = FgAbelian::cyclic(2);

std::string label_at(const Chart& c, Degree d) {
    const ChartEntry* e = c.entry_at(d);
    if (!e || e->gens.empty()) return "";
    return e->gens[0].name.text();
}

}  // namespace

TEST_CASE("degree arithmetic and windows") {
    CHECK(Degree{1, 2} + Degree{3, -1} == Degree{4, 1});
    CHECK(kRho * 3 == Degree{3, 3});
    Window w = Window::parse("-2..3,-4..5");
    CHECK(w == Window{-2, 3, -4, 5});
    CHECK(Window::parse("-12..12") == Window::square(-12, 12));
    CHECK(w.to_string() == "-2..3,-4..5");
    CHECK(Window{0, -1, 0, 0}.empty());
    CHECK_THROWS_AS(Window::parse("1..x"), ParseError);
}

TEST_CASE("generator names") {
    CHECK(symbol_degree(Symbol::a) == Degree{0, -1});
    CHECK(symbol_degree(Symbol::lambda) == Degree{1, -1});
    CHECK(symbol_degree(Symbol::u) == Degree{2, -2});
    CHECK(symbol_degree(Symbol::U) == Degree{4, -4});
    CHECK(symbol_degree(Symbol::vbar) == Degree{1, 1});
    // y = a^2 u^-1, Y = a^4 U^-1
    CHECK(symbol_degree(Symbol::y) == GeneratorName::parse("a^2*u^-1").degree());
    CHECK(symbol_degree(Symbol::Y) == GeneratorName::parse("a^4*U^-1").degree());

    for (std::string t : {"1", "a^3*u^2", "2*u^-1", "t(1,5)", "2*u*vbar^3*U^-2", "-a", "[eta]", "2"}) {
        CHECK(GeneratorName::parse(t).text() == t);
    }
    CHECK(GeneratorName::parse("a^3*u^2").degree() == Degree{4, -7});
    CHECK(GeneratorName::tower(1, 5).degree() == Degree{-3, 5});
    CHECK((GeneratorName::parse("a") * GeneratorName::parse("vbar")).degree() == Degree{1, 0});
    CHECK_THROWS_AS(GeneratorName::parse("q^2"), ParseError);
}

TEST_CASE("closed_form_hz examples") {
    Chart c = closed_form_hz(Window::square(-12, 12));
    CHECK(c.group_at({0, 0}) == Z);
    CHECK(c.entry_at({0, 0})->gens[0].annotation == Annotation::square);
    CHECK(label_at(c, {0, 0}) == "1");
    CHECK(c.group_at({0, -3}) == F2);
    CHECK(label_at(c, {0, -3}) == "a^3");
    CHECK(c.group_at({-3, 3}) == F2);
    CHECK(c.group_at({-1, 1}).is_zero());
    CHECK(c.group_at({-2, 2}) == Z);
    CHECK(c.entry_at({-2, 2})->gens[0].annotation == Annotation::circle);
    CHECK(label_at(c, {-2, 2}) == "2*u^-1");
    CHECK(c.group_at({2, -2}) == Z);
    CHECK(c.group_at({2, -3}) == F2);
    CHECK(c.group_at({-3, 2}).is_zero());
    CHECK_THROWS_AS(c.group_at({13, 0}), WindowError);
}

TEST_CASE("closed_form_hz structure maps") {
    Chart c = closed_form_hz(Window::square(-12, 12));
    CHECK(c.mult_map("a", {0, 0}) == IntMatrix{{1}});
    CHECK(c.mult_map("a", {-2, 2}) == IntMatrix(0, 1));
    CHECK(c.mult_map("a", {-2, 2}).is_zero());
    CHECK(c.mult_map("u", {0, 0}) == IntMatrix{{1}});
    CHECK(c.mult_map("u", {-2, 2}) == IntMatrix{{2}});
    CHECK(c.mult_map("u", {-4, 4}) == IntMatrix{{1}});
    CHECK(c.mult_map("u", {-5, 6}) == IntMatrix{{1}});  // t(2,6) -> t(1,4)
    CHECK(c.mult_map("u", {-3, 5}).is_zero());
    CHECK_THROWS_AS(c.mult_map("a", {0, -12}), WindowError);
    CHECK(c.check_commutation("a", "u").empty());

    // every lower half-plane dot maps isomorphically to the dot below
    for (const auto& [d, e] : c.entries()) {
        if (d.y >= -d.x || d.x < 0 || e.group != F2 || d.y - 1 < c.window().y_min) continue;
        CHECK(is_isomorphism(c.mult_map("a", d), F2, F2));
    }
}

TEST_CASE("closed_form_kr examples") {
    Chart c = closed_form_kr(Window::square(-12, 12));
    CHECK(c.group_at({0, 0}) == Z);
    CHECK(label_at(c, {0, 0}) == "1");
    CHECK(c.group_at({1, 0}) == F2);
    CHECK(label_at(c, {1, 0}) == "a*vbar");
    CHECK(c.group_at({4, -4}) == Z);
    CHECK(label_at(c, {4, -4}) == "U");
    CHECK(c.group_at({-1, 1}).is_zero());
    CHECK(c.group_at({2, -2}) == Z);
    CHECK(c.entry_at({2, -2})->gens[0].annotation == Annotation::circle);
    CHECK(c.group_at({-4, 4}) == Z);
    CHECK(label_at(c, {-4, 4}) == "2*U^-1");
    CHECK(c.group_at({-3, 5}) == Z);
    CHECK(c.group_at({-5, 7}) == Z + F2);
    CHECK(c.group_at({-5, 5}) == F2);
    CHECK(c.group_at({-4, 3}).is_zero());
    CHECK(c.check_commutation("a", "vbar").empty());
    CHECK(c.check_commutation("a", "U").empty());
    CHECK(c.check_commutation("vbar", "U").empty());
    CHECK(c.mult_map("vbar", {-4, 4}) == IntMatrix{{2}});
    CHECK(c.mult_map("U", {-4, 4}) == IntMatrix{{2}});
    CHECK(c.mult_map("a", {0, 0}) == IntMatrix{{1}});
    CHECK(c.mult_map("a", {1, 1}) == IntMatrix{{1}});
    CHECK(c.mult_map("a", {2, -2}).is_zero());
}

TEST_CASE("charts reject inconsistent data") {
    Chart c("HZ", "test", Window::square(-2, 2));
    CHECK_THROWS_AS(c.set_entry({5, 5}, ChartEntry::bare(Z)), WindowError);
    CHECK_THROWS_AS(c.set_entry({0, 0}, {Z, {{GeneratorName::one(), Annotation::dot}}}), RoqError);
    c.set_entry({0, 0}, ChartEntry::bare(Z));
    c.set_entry({0, -1}, ChartEntry::bare(F2));
    CHECK_THROWS_AS(c.mult_map("a", {0, 0}), MissingMapError);
    c.set_map("a", {0, 0}, IntMatrix{{3}});
    CHECK(c.mult_map("a", {0, 0}) == IntMatrix{{1}});
    CHECK_THROWS_AS(c.set_map("a", {0, -1}, IntMatrix{{1}}), RoqError);
    Chart r = c.restricted(Window{0, 0, 0, 0});
    CHECK(r.entries().size() == 1);
    CHECK(r.maps().empty());
}
