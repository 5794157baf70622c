#include "doctest.h"

#include "roq/cells/bredon.hpp"
#include "roq/cells/sphere_complex.hpp"
#include "roq/exact/hom.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/util/errors.hpp"

using namespace roq;

namespace {

const FgAbelian Z = FgAbelian::free(1);
const FgAbelian F2 = FgAbelian::cyclic(2);

// Kernel and cokernel of a map, which pin it down up to automorphisms of
// cyclic source and target.
std::pair<FgAbelian, FgAbelian> shape(const IntMatrix& m, const FgAbelian& s, const FgAbelian& t) {
    return {kernel_of(m, s, t).group(), cokernel_of(m, s, t).group()};
}

}  // namespace

TEST_CASE("constant Mackey functor") {
    MackeyQ z = MackeyQ::constant_z();
    CHECK_NOTHROW(z.validate());
    MackeyQ bad = z;
    bad.ind = IntMatrix{{3}};
    CHECK_THROWS_AS(bad.validate(), RoqError);
    // The Burnside-type functor with free Q/1 value is valid but unsupported.
    MackeyQ a{1, 2, IntMatrix{{1}, {1}}, IntMatrix{{1, 1}}, IntMatrix{{0, 1}, {1, 0}}};
    CHECK_NOTHROW(a.validate());
    CHECK_THROWS_AS(sphere_complex(2, Variance::homological, a), UnsupportedError);
}

TEST_CASE("sphere chain complexes") {
    auto h1 = sphere_complex(1, Variance::homological, MackeyQ::constant_z());
    CHECK(h1.complex.boundary(1) == IntMatrix{{2}});
    auto c2 = sphere_complex(2, Variance::cohomological, MackeyQ::constant_z());
    // C^0 -> C^1 -> C^2 stored in degrees 0, -1, -2.
    CHECK(c2.complex.boundary(0) == IntMatrix{{1}});
    CHECK(c2.complex.boundary(-1) == IntMatrix{{0}});
    auto h4 = sphere_complex(4, Variance::homological, MackeyQ::constant_z());
    CHECK(h4.complex.boundary(2) == IntMatrix{{0}});
    CHECK(h4.complex.boundary(3) == IntMatrix{{2}});
    CHECK(h4.complex.boundary(4) == IntMatrix{{0}});
    CHECK_THROWS_AS(sphere_complex(-1, Variance::homological, MackeyQ::constant_z()), RoqError);
}

TEST_CASE("Bredon rows") {
    auto r0 = bredon_row(0, -10, 10);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].first == Degree{0, 0});
    CHECK(r0[0].second == Z);

    auto rm3 = bredon_row(-3, -10, 10);
    REQUIRE(rm3.size() == 2);
    CHECK(rm3[0] == std::pair{Degree{0, -3}, F2});
    CHECK(rm3[1] == std::pair{Degree{2, -3}, F2});

    auto rm2 = bredon_row(-2, -10, 10);
    REQUIRE(rm2.size() == 2);
    CHECK(rm2[0] == std::pair{Degree{0, -2}, F2});
    CHECK(rm2[1] == std::pair{Degree{2, -2}, Z});

    auto r4 = bredon_row(4, -10, 10);
    REQUIRE(r4.size() == 2);
    CHECK(r4[0] == std::pair{Degree{-4, 4}, Z});
    CHECK(r4[1] == std::pair{Degree{-3, 4}, F2});

    CHECK(bredon_row(1, -10, 10).empty());
    CHECK(bredon_row(-3, 1, 1).empty());
}

TEST_CASE("cellular chart agrees with the closed form") {
    for (Window w : {Window::square(-6, 6), Window{-9, 3, -12, 8}}) {
        Chart cells = cellular_chart_hz(w, 2);
        Chart closed = closed_form_hz(w).bare();
        REQUIRE(cells.entries().size() == closed.entries().size());
        for (const auto& [d, e] : closed.entries()) {
            CAPTURE(d.to_string());
            CHECK(cells.group_at(d) == e.group);
            Degree t = d + Degree{0, -1};
            if (!w.contains(t)) continue;
            CHECK(shape(cells.mult_map("a", d), e.group, cells.group_at(t)) ==
                  shape(closed.mult_map("a", d), e.group, closed.group_at(t)));
        }
    }
}

TEST_CASE("orbit space comparison") {
    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(quotient_row_check(n));
    }
    auto rp3 = join_rp_cohomology(3);
    REQUIRE(rp3.size() == 2);
    CHECK(rp3[0] == std::pair{3, F2});
    CHECK(rp3[1] == std::pair{4, Z});
    // H^Q_0(S^sigma) = Z/2 but the orbit space S^sigma/Q is an interval.
    CHECK(bredon_row(-1, 0, 0)[0].second == F2);
    CHECK(quotient_homology(1, 0).is_zero());
    CHECK(quotient_homology(1, 1).is_zero());
    CHECK(quotient_homology(3, 2) == F2);
}
