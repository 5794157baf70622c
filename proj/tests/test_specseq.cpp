#include "doctest.h"

#include <random>

#include "roq/exact/hom.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/specseq/page.hpp"
#include "roq/util/errors.hpp"

using namespace roq;

namespace {

const FgAbelian Z = FgAbelian::free(1);
const FgAbelian F2 = FgAbelian::cyclic(2);

Alphabet hz_alphabet() {
    return Alphabet({{"a", {-1, 1, -1}, false}, {"lambda", {0, 1, -1}, true}});
}

Alphabet kr_alphabet() {
    return Alphabet({{"a", {-1, 1, -1}, false}, {"lambda", {0, 1, -1}, true}, {"vbar", {0, 1, 1}, false}});
}

DifferentialSpec d1(const Alphabet& alpha) {
    DifferentialSpec d;
    d.r = 1;
    for (const auto& g : alpha.generators()) d.gens.push_back(parse_page_generator(alpha, g.name));
    d.images["lambda"] = parse_polynomial(alpha, "2*a");
    return d;
}

DifferentialSpec d3(const Alphabet& alpha) {
    DifferentialSpec d;
    d.r = 3;
    for (const char* g : {"a", "vbar", "u=lambda^2"}) d.gens.push_back(parse_page_generator(alpha, g));
    d.images["u"] = parse_polynomial(alpha, "vbar*a^3", d.gens);
    return d;
}

// Tridegree of a^i lambda^j vbar^k.
TriDegree tri(int i, int j, int k) { return {-i, i + j + k, -i - j + k}; }

}  // namespace

TEST_CASE("polynomials") {
    Alphabet alpha = kr_alphabet();
    Polynomial p = parse_polynomial(alpha, "2*a - lambda^-1*vbar + 3");
    CHECK(p.terms().size() == 3);
    CHECK(parse_polynomial(alpha, "0").is_zero());
    CHECK(parse_polynomial(alpha, "a*a^2") == Polynomial::monomial({3, 0, 0}));
    CHECK(parse_polynomial(alpha, "vbar*a^3").format(alpha) == "a^3*vbar");
    CHECK_THROWS_AS(parse_polynomial(alpha, "x"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(alpha, "a+"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(alpha, "a + lambda").degree(alpha), DegreeMismatchError);
    PageGenerator u = parse_page_generator(alpha, "u=lambda^2");
    CHECK(u.base == 1);
    CHECK(u.power == 2);
    CHECK_THROWS_AS(parse_page_generator(alpha, "w=a*lambda"), ParseError);
    CHECK(alpha.degree({3, 0, 1}) == TriDegree{-3, 4, -2});
    CHECK(TriDegree::differential(3) == TriDegree{-3, 2, 0});
}

TEST_CASE("E1 presentations") {
    Window w = Window::square(-3, 3);
    Page hz = Page::from_presentation(hz_alphabet(), PageWindow::around(w, 1, 2));
    CHECK(hz.number() == 1);
    // One monomial a^i lambda^j per tridegree.
    for (const auto& t : hz.support()) CHECK(hz.group_at(t) == Z);
    CHECK(hz.group_at(tri(2, -1, 0)) == Z);
    CHECK(hz.group_at(tri(0, 0, 0)) == Z);

    Page empty = Page::from_presentation(Alphabet(), PageWindow::around(w, 0, 0));
    REQUIRE(empty.support().size() == 1);
    CHECK(empty.support()[0] == TriDegree{});
}

TEST_CASE("d1 on Z[a][lambda^±]") {
    Alphabet alpha = hz_alphabet();
    Page e1 = Page::from_presentation(alpha, PageWindow::around(Window::square(-4, 4), 2, 2));
    DifferentialSpec d = d1(alpha);
    // u = lambda^2 is a cycle; odd powers hit 2a.
    CHECK(e1.differential_of(d, {0, 2}).is_zero());
    CHECK(e1.differential_of(d, {0, 3}) == Polynomial::monomial({1, 2}, 2));
    CHECK(e1.differential_of(d, {2, -1}) == Polynomial::monomial({3, -2}, 2));

    Page e2 = e1.turn(d);
    CHECK(e2.number() == 2);
    for (int j = -1; j <= 1; ++j) {
        CHECK(e2.group_at(tri(0, 2 * j, 0)) == Z);
        CHECK(e2.group_at(tri(1, 2 * j, 0)) == F2);
        CHECK(e2.group_at(tri(3, 2 * j, 0)) == F2);
        CHECK(e2.group_at(tri(0, 2 * j + 1, 0)).is_zero());
        CHECK(e2.group_at(tri(2, 2 * j + 1, 0)).is_zero());
    }
    CHECK(e2.candidates(2).empty());

    // E2 is BB[u, u^-1] in the read zone.
    Window w = Window::square(-4, 4);
    Chart c = collapse_to_chart(e2.turn_trivial(), w, {{"a", {1, 0}}, {"u", {0, 2}}}, "hz", "hfp");
    CHECK(c.group_at({0, 0}) == Z);
    CHECK(c.group_at({-2, 2}) == Z);
    CHECK(c.group_at({0, -1}) == F2);
    CHECK(c.group_at({-2, -1}) == F2);
    CHECK(c.group_at({1, 0}).is_zero());
    CHECK(c.mult_map("a", {0, 0}) == IntMatrix{{1}});
    CHECK(c.mult_map("u", {0, 0}) == IntMatrix{{1}});
    CHECK(c.mult_map("a", {1, 0}).rows() == 0);
}

TEST_CASE("Leibniz rule on random monomial pairs") {
    Alphabet alpha = kr_alphabet();
    Page e1 = Page::from_presentation(alpha, PageWindow::around(Window::square(-2, 2), 0, 0));
    DifferentialSpec d = d1(alpha);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> small(0, 4), sgn(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Exponents m{small(rng), sgn(rng), small(rng)};
        Exponents n{small(rng), sgn(rng), small(rng)};
        Polynomial lhs = e1.differential_of(d, multiply(m, n));
        int pm = std::abs(alpha.degree(m).total()) % 2;
        Polynomial rhs = e1.differential_of(d, m) * Polynomial::monomial(n) +
                         Polynomial::monomial(m, pm ? -1 : 1) * e1.differential_of(d, n);
        // Odd generators square to a 2-torsion class in the target, so
        // compare modulo 2 and exactly when no odd power is involved.
        if (m[1] % 2 == 0 && n[1] % 2 == 0) {
            CHECK(lhs == rhs);
        } else {
            Polynomial diff = lhs + rhs.scaled(-1);
            for (const auto& [e, c] : diff.terms()) CHECK(c % 2 == 0);
        }
    }
}

TEST_CASE("kR pages") {
    Alphabet alpha = kr_alphabet();
    Window w = Window::square(-6, 6);
    Page e1 = Page::from_presentation(alpha, PageWindow::around(w, 4, 3));
    Page e2 = e1.turn(d1(alpha));
    CHECK(e2.candidates(2).empty());
    Page e3 = e2.turn_trivial();
    DifferentialSpec d = d3(alpha);
    // d(U) = d(u^2) = 2 u vbar a^3, zero on E3.
    CHECK(e3.differential_of(d, {0, 4, 0}) == Polynomial::monomial({3, 2, 1}, 2));
    Page e4 = e3.turn(d);
    CHECK(e4.group_at(tri(3, 0, 1)).is_zero());   // vbar a^3
    CHECK(e4.group_at(tri(2, 0, 1)) == F2);       // a^2 vbar
    CHECK(e4.group_at(tri(0, 2, 0)) == Z);         // 2u
    CHECK(e4.group_at(tri(0, 2, 1)) == Z);        // 2u vbar
    CHECK(e4.group_at(tri(0, 4, 0)) == Z);        // U
    CHECK(e4.group_at(tri(5, 4, 0)) == F2);       // a^5 U

    std::vector<Degree> multi;
    Chart c = collapse_to_chart(e4, w, {{"a", {1, 0, 0}}, {"vbar", {0, 0, 1}}, {"U", {0, 4, 0}}}, "kr", "hfp", &multi);
    CHECK(multi.empty());
    CHECK(c.group_at({1, 0}) == F2);
    CHECK(c.group_at({2, 0}) == F2);
    CHECK(c.group_at({3, 0}).is_zero());
    CHECK(c.group_at({4, 0}) == Z);
    CHECK(c.group_at({-4, 0}) == F2);
    CHECK(c.group_at({-1, 0}).is_zero());
    CHECK(c.mult_map("a", {1, 1}) == IntMatrix{{1}});
}

TEST_CASE("bad differentials are rejected") {
    Alphabet alpha = hz_alphabet();
    Page e1 = Page::from_presentation(alpha, PageWindow::around(Window::square(-2, 2), 1, 1));
    DifferentialSpec bad = d1(alpha);
    bad.images["lambda"] = parse_polynomial(alpha, "a^2");
    CHECK_THROWS_AS(e1.turn(bad), DegreeMismatchError);
    DifferentialSpec wrong_page = d1(alpha);
    wrong_page.r = 2;
    CHECK_THROWS_AS(e1.turn(wrong_page), DifferentialError);
    // d(lambda) = a is not compatible with d^2 = 0? It is; but E1 has
    // candidates, so skipping the page is refused.
    CHECK_THROWS_AS(e1.turn_trivial(), DifferentialError);
    DifferentialSpec zero = d1(alpha);
    zero.images.clear();
    Page same = e1.turn(zero);
    CHECK(same.support() == e1.support());
}
