#pragma once

#include <array>
#include <optional>
#include <string>

#include "roq/exact/integer.hpp"
#include "roq/grading/degree.hpp"

namespace roq {

// Symbols of the generator alphabet, in the canonical print order.
enum class Symbol { a, lambda, u, vbar, U, y, Y, xphi, vhat };
inline constexpr std::size_t kNumSymbols = 9;

const char* symbol_token(Symbol s);
std::optional<Symbol> symbol_from_token(const std::string& token);
Degree symbol_degree(Symbol s);

// Canonical generator names: coefficient times a Laurent monomial, an
// element t(j,y) of a dual a-tower at (-2j-1, y), or an opaque named
// element. Text forms are "1", "a^3*u^2", "2*u^-1", "t(1,5)".
class GeneratorName {
public:
    enum class Kind { monomial, tower, named };

    GeneratorName() = default;
    static GeneratorName monomial(std::array<int, kNumSymbols> exps, int coefficient = 1);
    static GeneratorName one() { return monomial({}); }
    static GeneratorName of(Symbol s, int e = 1);
    static GeneratorName tower(int j, int y);
    static GeneratorName named(std::string label, Degree degree);

    Kind kind() const { return kind_; }
    int coefficient() const { return coefficient_; }
    int exponent(Symbol s) const { return exps_[static_cast<std::size_t>(s)]; }
    const std::array<int, kNumSymbols>& exponents() const { return exps_; }
    int tower_j() const { return tj_; }
    int tower_y() const { return ty_; }
    const std::string& label() const { return label_; }

    Degree degree() const;
    // Product of two monomial names (coefficients multiply).
    GeneratorName operator*(const GeneratorName& o) const;
    GeneratorName with_coefficient(int c) const;

    std::string text() const;
    // Named elements carry no degree in their text; `at` supplies it.
    static GeneratorName parse(const std::string& text, Degree at = {});

    bool operator==(const GeneratorName& o) const { return text() == o.text(); }
    bool operator<(const GeneratorName& o) const { return text() < o.text(); }

private:
    Kind kind_ = Kind::monomial;
    int coefficient_ = 1;
    std::array<int, kNumSymbols> exps_{};
    int tj_ = 0;
    int ty_ = 0;
    std::string label_;
    Degree named_degree_{};
};

// square: a copy of Z; circle: a copy of Z generated by twice the expected
// class; dot: a copy of F_2.
enum class Annotation { square, circle, dot };

const char* annotation_token(Annotation a);
std::optional<Annotation> annotation_from_token(const std::string& token);

struct LabeledGenerator {
    GeneratorName name;
    Annotation annotation = Annotation::square;
    bool operator==(const LabeledGenerator&) const = default;
};

}  // namespace roq
