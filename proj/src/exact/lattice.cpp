#include "roq/exact/lattice.hpp"

#include <fmt/format.h>

#include "roq/exact/smith.hpp"
#include "roq/util/errors.hpp"

namespace roq {

Lattice::Lattice(IntMatrix basis) : basis_(std::move(basis)) {
    SmithForm s = smith_normal_form(basis_);
    if (s.rank != basis_.cols()) throw RoqError("Lattice: basis is not linearly independent");
    left_ = std::move(s.left);
    right_ = std::move(s.right);
    d_ = s.invariants();
}

Lattice Lattice::zero(std::size_t ambient) { return Lattice(IntMatrix(ambient, 0)); }

Lattice Lattice::full(std::size_t ambient) { return Lattice(IntMatrix::identity(ambient)); }

Lattice Lattice::span(const IntMatrix& gens) {
    SmithForm s = smith_normal_form(gens);
    IntMatrix basis(gens.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < gens.rows(); ++i) basis(i, j) = s.left_inv(i, j) * s.diag(j, j);
    return Lattice(std::move(basis));
}

Lattice Lattice::span(std::size_t ambient, const std::vector<std::vector<Integer>>& gens) {
    return span(IntMatrix::from_columns(ambient, gens));
}

std::optional<std::vector<Integer>> Lattice::coordinates(const std::vector<Integer>& v) const {
    if (v.size() != ambient()) throw RoqError("Lattice::coordinates: length mismatch");
    std::vector<Integer> w = left_.apply(v);
    std::size_t k = dim();
    std::vector<Integer> z(k);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < k) {
            if (w[i] % d_[i] != 0) return std::nullopt;
            z[i] = w[i] / d_[i];
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return right_.apply(z);
}

bool Lattice::contains(const std::vector<Integer>& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
    if (other.ambient() != ambient()) return false;
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_vector(j))) return false;
    return true;
}

Lattice Lattice::operator+(const Lattice& o) const {
    if (o.ambient() != ambient()) throw RoqError("Lattice: ambient mismatch in +");
    return span(basis_.hstack(o.basis_));
}

Lattice Lattice::image(const IntMatrix& m) const {
    if (m.cols() != ambient()) throw RoqError("Lattice::image: shape mismatch");
    return span(m * basis_);
}

Lattice Lattice::preimage(const IntMatrix& m, const Lattice& target) {
    if (m.rows() != target.ambient()) throw RoqError("Lattice::preimage: shape mismatch");
    const std::size_t p = m.cols();
    IntMatrix a = m.hstack(-target.basis());
    SmithForm s = smith_normal_form(a);
    std::vector<std::vector<Integer>> gens;
    for (std::size_t j = s.rank; j < a.cols(); ++j) {
        std::vector<Integer> v(p);
        for (std::size_t i = 0; i < p; ++i) v[i] = s.right(i, j);
        gens.push_back(std::move(v));
    }
    return span(p, gens);
}

Lattice Lattice::kernel(const IntMatrix& m) { return preimage(m, zero(m.rows())); }

Subquotient::Subquotient(Lattice cycles, Lattice boundaries)
    : cycles_(std::move(cycles)), boundaries_(std::move(boundaries)) {
    if (!cycles_.contains(boundaries_)) throw RoqError("Subquotient: boundaries not contained in cycles");
    const std::size_t kz = cycles_.dim();
    IntMatrix c(kz, boundaries_.dim());
    for (std::size_t j = 0; j < boundaries_.dim(); ++j) {
        auto w = *cycles_.coordinates(boundaries_.basis_vector(j));
        for (std::size_t i = 0; i < kz; ++i) c(i, j) = w[i];
    }
    SmithForm s = smith_normal_form(c);
    extract_ = s.left;
    std::vector<Integer> torsion;
    std::vector<std::size_t> torsion_slots;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.diag(i, i) > 1) {
            torsion.push_back(s.diag(i, i));
            torsion_slots.push_back(i);
        }
    for (std::size_t i = s.rank; i < kz; ++i) slot_.push_back(i);
    slot_.insert(slot_.end(), torsion_slots.begin(), torsion_slots.end());
    group_ = FgAbelian(kz - s.rank, std::move(torsion));
    const IntMatrix& zb = cycles_.basis();
    for (std::size_t g : slot_) {
        std::vector<Integer> v(cycles_.ambient());
        for (std::size_t i = 0; i < cycles_.ambient(); ++i)
            for (std::size_t k = 0; k < kz; ++k)
                if (s.left_inv(k, g) != 0) v[i] += zb(i, k) * s.left_inv(k, g);
        generators_.push_back(std::move(v));
    }
}

Subquotient Subquotient::standard(const FgAbelian& g) {
    const std::size_t n = g.num_generators();
    std::vector<std::vector<Integer>> rel;
    for (std::size_t i = g.rank(); i < n; ++i) {
        std::vector<Integer> v(n);
        v[i] = g.generator_order(i);
        rel.push_back(std::move(v));
    }
    Subquotient s(Lattice::full(n), Lattice::span(n, rel));
    if (!(s.group_ == g)) throw RoqError("Subquotient::standard: normal form mismatch");
    // Use the identity basis rather than whatever the reduction picked.
    s.generators_.clear();
    s.slot_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> v(n);
        v[i] = 1;
        s.generators_.push_back(std::move(v));
        s.slot_.push_back(i);
    }
    s.extract_ = IntMatrix::identity(n);
    s.cycles_ = Lattice::full(n);
    return s;
}

std::vector<Integer> Subquotient::coordinates(const std::vector<Integer>& v) const {
    auto w = cycles_.coordinates(v);
    if (!w) throw RoqError("Subquotient::coordinates: vector is not a cycle");
    // cycles_ is rebuilt as full(n) for standard(); coordinates equal v there.
    std::vector<Integer> y = extract_.apply(*w);
    std::vector<Integer> out(slot_.size());
    for (std::size_t g = 0; g < slot_.size(); ++g) {
        out[g] = y[slot_[g]];
        Integer ord = group_.generator_order(g);
        if (ord != 0) out[g] = mod_floor(out[g], ord);
    }
    return out;
}

IntMatrix Subquotient::induced_map(const IntMatrix& m, const Subquotient& target) const {
    if (m.cols() != ambient() || m.rows() != target.ambient())
        throw RoqError(fmt::format("Subquotient::induced_map: shape {}x{} vs ambients {} -> {}", m.rows(),
                                   m.cols(), ambient(), target.ambient()));
    IntMatrix out(target.group().num_generators(), group_.num_generators());
    for (std::size_t j = 0; j < generators_.size(); ++j) {
        std::vector<Integer> img = m.apply(generators_[j]);
        if (!target.contains(img)) throw RoqError("Subquotient::induced_map: image leaves the target cycles");
        auto c = target.coordinates(img);
        for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
    }
    return out;
}

}  // namespace roq
