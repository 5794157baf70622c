#include "roq/theories/theta.hpp"

#include "roq/grading/closed_form.hpp"
#include "roq/util/errors.hpp"

namespace roq {

std::optional<GeneratorName> theta_rule(const GeneratorName& m) {
    using S = Symbol;
    if (m.kind() == GeneratorName::Kind::tower) {
        if (m.tower_j() % 2 == 0) return std::nullopt;
        return GeneratorName::tower(m.tower_j() + 1, m.tower_y() - 1);
    }
    if (m.kind() != GeneratorName::Kind::monomial) return std::nullopt;
    // Circles 2u^-j map to 2-torsion classes, hence to 0.
    if (m.coefficient() % 2 == 0) return std::nullopt;
    const int j = m.exponent(S::u);
    if (j % 2 == 0) return std::nullopt;
    auto e = m.exponents();
    e[static_cast<std::size_t>(S::a)] += 3;
    e[static_cast<std::size_t>(S::u)] -= 1;
    return GeneratorName::monomial(e, 1);
}

std::optional<GeneratorName> theta_apply(const GeneratorName& m) {
    if (!hz_generator_exists(m)) throw RoqError("theta: " + m.text() + " is not a generator of HZ");
    auto img = theta_rule(m);
    if (img && !hz_generator_exists(*img)) return std::nullopt;
    return img;
}

IntMatrix theta_matrix(const Chart& c, const Degree& d) {
    const ChartEntry* src = c.entry_at(d);
    const ChartEntry* dst = c.entry_at(d + kThetaDegree);
    const std::size_t cols = src ? src->group.num_generators() : 0;
    const std::size_t rows = dst ? dst->group.num_generators() : 0;
    IntMatrix m = IntMatrix::zero(rows, cols);
    if (!src || !dst) return m;
    if (src->gens.size() != cols || dst->gens.size() != rows)
        throw MissingMapError("theta_matrix: chart entries at " + d.to_string() + " carry no generator labels");
    for (std::size_t j = 0; j < cols; ++j) {
        auto img = theta_rule(src->gens[j].name);
        if (!img) continue;
        for (std::size_t i = 0; i < rows; ++i)
            if (dst->gens[i].name == *img) m(i, j) = 1;
    }
    return m;
}

}  // namespace roq
