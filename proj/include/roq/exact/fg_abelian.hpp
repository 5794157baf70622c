#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "roq/exact/integer.hpp"

namespace roq {

// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k with
// d_1 | d_2 | ... | d_k and every d_i >= 2.
class FgAbelian {
public:
    FgAbelian() = default;
    FgAbelian(std::size_t rank, std::vector<Integer> torsion);

    static FgAbelian zero() { return {}; }
    static FgAbelian free(std::size_t rank) { return FgAbelian(rank, {}); }
    static FgAbelian cyclic(const Integer& order);
    // Normalizes an arbitrary direct sum of cyclic groups; order 0 means Z,
    // order 1 is dropped.
    static FgAbelian from_cyclic(const std::vector<Integer>& orders);

    std::size_t rank() const { return rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_zero() const { return rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }
    // Number of generators in the standard basis (free first, then torsion).
    std::size_t num_generators() const { return rank_ + torsion_.size(); }
    // Order of standard generator i; 0 for a free generator.
    Integer generator_order(std::size_t i) const;

    FgAbelian operator+(const FgAbelian& o) const;
    bool operator==(const FgAbelian& o) const = default;

    // "0", "Z", "Z^2", "Z/2", "Z+Z/2+Z/4"
    std::string to_string() const;
    static FgAbelian parse(const std::string& text);

private:
    std::size_t rank_ = 0;
    std::vector<Integer> torsion_;
};

bool iso_check(const FgAbelian& g1, const FgAbelian& g2);

struct CompositionFactors {
    std::size_t rank = 0;
    // prime power -> multiplicity
    std::map<Integer, std::size_t> prime_powers;
    bool operator==(const CompositionFactors& o) const = default;
};

CompositionFactors composition_factors(const FgAbelian& g);

// Jordan-Hoelder data: rank plus primes with multiplicity. Unlike the
// prime-power decomposition this is invariant under extensions.
struct JordanHolder {
    std::size_t rank = 0;
    std::map<Integer, std::size_t> primes;
    bool operator==(const JordanHolder& o) const = default;
};

JordanHolder jordan_holder(const FgAbelian& g);
JordanHolder jordan_holder(const std::vector<FgAbelian>& pieces);

// Prime factorization by trial division.
std::map<Integer, std::size_t> factorize(Integer n);

}  // namespace roq
