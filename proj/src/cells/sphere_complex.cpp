#include "roq/cells/sphere_complex.hpp"

#include "roq/util/errors.hpp"

namespace roq {

SphereComplex sphere_complex(int n, Variance variance, const MackeyQ& m) {
    if (n < 0) throw RoqError("sphere_complex: n must be non-negative");
    m.validate();
    if (!(m == MackeyQ::constant_z()))
        throw UnsupportedError("sphere_complex: only the constant Mackey functor Z is supported");

    const std::size_t top = m.top_rank;
    const std::size_t bot = m.bottom_rank;
    const IntMatrix id = IntMatrix::identity(bot);
    // The free cell Q x e^k has boundary e^{k-1} + (-1)^k g e^{k-1} (up to the
    // overall sign absorbed into the basis), so the cellular boundary on the
    // Q/1 values is 1 + (-1)^k weyl. The bottom free cell attaches to the
    // two fixed points, which gives the transfer (homology) or the
    // restriction (cohomology).
    std::vector<std::size_t> ranks{top};
    for (int k = 1; k <= n; ++k) ranks.push_back(bot);

    SphereComplex out;
    out.n = n;
    out.variance = variance;
    std::vector<IntMatrix> maps;
    if (variance == Variance::homological) {
        for (int k = 1; k <= n; ++k) {
            if (k == 1)
                maps.push_back(m.ind);
            else
                maps.push_back(k % 2 == 0 ? id - m.weyl : id + m.weyl);
        }
        out.complex = IntComplex(0, ranks, maps);
    } else {
        for (int k = 0; k < n; ++k) {
            if (k == 0)
                maps.push_back(m.res);
            else
                maps.push_back(k % 2 == 0 ? id + m.weyl : id - m.weyl);
        }
        out.complex = IntComplex::from_cochain(0, ranks, maps);
    }
    return out;
}

IntComplex quotient_sphere_chains(int n) {
    if (n < 0) throw RoqError("quotient_sphere_chains: n must be non-negative");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 1);
    std::vector<IntMatrix> maps;
    for (int k = 1; k <= n; ++k) maps.push_back(IntMatrix{{k == 1 ? 1 : (k % 2 == 0 ? 0 : 2)}});
    return IntComplex(0, ranks, maps);
}

}  // namespace roq
