#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "roq/exact/integer.hpp"
#include "roq/grading/degree.hpp"

namespace roq {

// (s, t, b): filtration, integer degree and sigma twist. The chart shadow
// is (s + t, b).
struct TriDegree {
    int s = 0;
    int t = 0;
    int b = 0;

    TriDegree operator+(const TriDegree& o) const { return {s + o.s, t + o.t, b + o.b}; }
    TriDegree operator-(const TriDegree& o) const { return {s - o.s, t - o.t, b - o.b}; }
    TriDegree operator*(int k) const { return {s * k, t * k, b * k}; }
    auto operator<=>(const TriDegree&) const = default;

    Degree shadow() const { return {s + t, b}; }
    int total() const { return s + t; }
    std::string to_string() const;

    // Tridegree of d^r.
    static TriDegree differential(int r) { return {-r, r - 1, 0}; }
};

struct GeneratorSpec {
    std::string name;
    TriDegree degree;
    bool invertible = false;
};

using Exponents = std::vector<int>;

// Free graded-commutative monomials over the generators.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<GeneratorSpec> gens);

    std::size_t size() const { return gens_.size(); }
    const GeneratorSpec& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    // Throws ParseError for unknown names.
    std::size_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    TriDegree degree(const Exponents& e) const;
    bool valid(const Exponents& e) const;  // non-invertibles have exponent >= 0
    Exponents unit() const { return Exponents(gens_.size(), 0); }
    Exponents power(std::size_t gen, int k) const;
    std::string format(const Exponents& e) const;

private:
    std::vector<GeneratorSpec> gens_;
};

Exponents multiply(const Exponents& l, const Exponents& r);

// Integer combinations of monomials; zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial monomial(Exponents e, Integer c = 1);

    const std::map<Exponents, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Exponents& e, const Integer& c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Integer& c) const;
    bool operator==(const Polynomial&) const = default;

    // Throws DegreeMismatchError unless all terms share one tridegree.
    TriDegree degree(const Alphabet& alpha) const;
    std::string format(const Alphabet& alpha) const;

private:
    std::map<Exponents, Integer> terms_;
};

// A multiplicative generator of a later page: a power of one generator of
// the alphabet, e.g. u = lambda^2.
struct PageGenerator {
    std::string name;
    std::size_t base = 0;
    int power = 1;
};

// "u=lambda^2" or a bare alphabet name.
PageGenerator parse_page_generator(const Alphabet& alpha, const std::string& text);

// Parses "2*a", "vbar*a^3", "-lambda^-1", "0" or a sum of such terms.
// Page generator names are expanded.
Polynomial parse_polynomial(const Alphabet& alpha, const std::string& text,
                            const std::vector<PageGenerator>& page_gens = {});

// d^r on the listed page generators; unlisted ones are cycles.
struct DifferentialSpec {
    int r = 1;
    std::vector<PageGenerator> gens;
    std::map<std::string, Polynomial> images;
};

// A chart structure map realised as multiplication by a monomial.
struct Multiplier {
    std::string map_name;
    Exponents monomial;
};

}  // namespace roq
