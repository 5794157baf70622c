#include "roq/exact/hom.hpp"

#include "roq/util/errors.hpp"

namespace roq {

namespace {

// Relations of g as a lattice in Z^(num_generators).
Lattice relations(const FgAbelian& g) {
    const std::size_t n = g.num_generators();
    std::vector<std::vector<Integer>> rel;
    for (std::size_t i = g.rank(); i < n; ++i) {
        std::vector<Integer> v(n);
        v[i] = g.generator_order(i);
        rel.push_back(std::move(v));
    }
    return Lattice::span(n, rel);
}

void check_shape(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target) {
    if (m.rows() != target.num_generators() || m.cols() != source.num_generators())
        throw RoqError("homomorphism matrix has the wrong shape for " + source.to_string() + " -> " +
                       target.to_string());
}

}  // namespace

IntMatrix reduce_to_target(const IntMatrix& m, const FgAbelian& target) {
    IntMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Integer ord = target.generator_order(i);
        if (ord == 0) continue;
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod_floor(r(i, j), ord);
    }
    return r;
}

bool is_homomorphism(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target) {
    check_shape(m, source, target);
    Lattice rt = relations(target);
    Lattice rs = relations(source);
    for (std::size_t j = 0; j < rs.dim(); ++j)
        if (!rt.contains(m.apply(rs.basis_vector(j)))) return false;
    return true;
}

Subquotient kernel_of(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target) {
    check_shape(m, source, target);
    if (!is_homomorphism(m, source, target))
        throw RoqError("kernel_of: matrix is not a homomorphism " + source.to_string() + " -> " +
                       target.to_string());
    return Subquotient(Lattice::preimage(m, relations(target)), relations(source));
}

Subquotient cokernel_of(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target) {
    check_shape(m, source, target);
    const std::size_t n = target.num_generators();
    return Subquotient(Lattice::full(n), relations(target) + Lattice::span(m));
}

bool is_isomorphism(const IntMatrix& m, const FgAbelian& source, const FgAbelian& target) {
    if (!(source == target)) return false;
    return kernel_of(m, source, target).group().is_zero() && cokernel_of(m, source, target).group().is_zero();
}

Lattice relation_lattice(const std::vector<FgAbelian>& summands) {
    std::size_t n = 0;
    for (const auto& g : summands) n += g.num_generators();
    std::vector<std::vector<Integer>> rel;
    std::size_t off = 0;
    for (const auto& g : summands) {
        for (std::size_t i = g.rank(); i < g.num_generators(); ++i) {
            std::vector<Integer> v(n);
            v[off + i] = g.generator_order(i);
            rel.push_back(std::move(v));
        }
        off += g.num_generators();
    }
    return Lattice::span(n, rel);
}

bool hom_nonzero(const FgAbelian& g, const FgAbelian& h) {
    if (g.is_zero() || h.is_zero()) return false;
    if (g.rank() > 0) return true;
    for (const auto& d : g.torsion())
        for (const auto& e : h.torsion())
            if (gcd(d, e) > 1) return true;
    return false;
}

}  // namespace roq
