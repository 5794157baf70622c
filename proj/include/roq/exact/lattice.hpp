#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roq/exact/fg_abelian.hpp"
#include "roq/exact/int_matrix.hpp"

namespace roq {

// Sublattice of Z^n given by a basis (columns of an n x k matrix of full
// column rank).
class Lattice {
public:
    Lattice() = default;
    static Lattice zero(std::size_t ambient);
    static Lattice full(std::size_t ambient);
    // Span of the columns of gens.
    static Lattice span(const IntMatrix& gens);
    static Lattice span(std::size_t ambient, const std::vector<std::vector<Integer>>& gens);

    std::size_t ambient() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    std::vector<Integer> basis_vector(std::size_t i) const { return basis_.column(i); }

    bool contains(const std::vector<Integer>& v) const;
    bool contains(const Lattice& other) const;
    // Coefficients c with basis * c == v, if v lies in the lattice.
    std::optional<std::vector<Integer>> coordinates(const std::vector<Integer>& v) const;

    Lattice operator+(const Lattice& o) const;
    bool operator==(const Lattice& o) const { return contains(o) && o.contains(*this); }

    // m : Z^ambient -> Z^k. Image lattice in Z^k.
    Lattice image(const IntMatrix& m) const;
    // { v in Z^m.cols : m v in this lattice }
    static Lattice preimage(const IntMatrix& m, const Lattice& target);
    static Lattice kernel(const IntMatrix& m);

private:
    explicit Lattice(IntMatrix basis);
    IntMatrix basis_;
    // Smith data of basis_: left_ * basis_ * right_ = diag(d_).
    IntMatrix left_;
    IntMatrix right_;
    std::vector<Integer> d_;
};

// The group cycles / boundaries for lattices boundaries <= cycles <= Z^n.
// Generators are ordered free first, then torsion by ascending order.
class Subquotient {
public:
    Subquotient(Lattice cycles, Lattice boundaries);

    // Z^(r+k) modulo the relations of g, with the identity basis.
    static Subquotient standard(const FgAbelian& g);

    const FgAbelian& group() const { return group_; }
    const Lattice& cycles() const { return cycles_; }
    const Lattice& boundaries() const { return boundaries_; }
    std::size_t ambient() const { return cycles_.ambient(); }

    // Representative in Z^n of generator i.
    const std::vector<Integer>& generator(std::size_t i) const { return generators_[i]; }
    const std::vector<std::vector<Integer>>& generators() const { return generators_; }

    bool contains(const std::vector<Integer>& v) const { return cycles_.contains(v); }
    // Coordinates of v (which must lie in the cycles) in the generator basis,
    // torsion coordinates reduced into [0, order).
    std::vector<Integer> coordinates(const std::vector<Integer>& v) const;
    bool is_boundary(const std::vector<Integer>& v) const { return boundaries_.contains(v); }

    // Matrix of the map induced by m : Z^n -> Z^n' from this subquotient to
    // target. Throws if m does not carry cycles into target cycles.
    IntMatrix induced_map(const IntMatrix& m, const Subquotient& target) const;

private:
    Lattice cycles_;
    Lattice boundaries_;
    FgAbelian group_;
    std::vector<std::vector<Integer>> generators_;
    // coordinate extraction: row i of extract_ applied to cycle coordinates
    IntMatrix extract_;
    std::vector<std::size_t> slot_;  // generator index -> row of extract_
};

}  // namespace roq
