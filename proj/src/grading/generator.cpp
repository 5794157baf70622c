#include "roq/grading/generator.hpp"

#include <fmt/format.h>

#include "roq/util/errors.hpp"

namespace roq {

namespace {

constexpr const char* kTokens[kNumSymbols] = {"a", "lambda", "u", "vbar", "U", "y", "Y", "xphi", "vhat"};
constexpr Degree kDegrees[kNumSymbols] = {{0, -1}, {1, -1}, {2, -2}, {1, 1}, {4, -4},
                                          {-2, 0}, {-4, 0}, {2, 0},  {1, 1}};

int parse_int(const std::string& s, const std::string& context) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + s + "' in generator '" + context + "'");
    }
}

}  // namespace

const char* symbol_token(Symbol s) { return kTokens[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_token(const std::string& token) {
    for (std::size_t i = 0; i < kNumSymbols; ++i)
        if (token == kTokens[i]) return static_cast<Symbol>(i);
    return std::nullopt;
}

Degree symbol_degree(Symbol s) { return kDegrees[static_cast<std::size_t>(s)]; }

GeneratorName GeneratorName::monomial(std::array<int, kNumSymbols> exps, int coefficient) {
    GeneratorName g;
    g.kind_ = Kind::monomial;
    g.exps_ = exps;
    g.coefficient_ = coefficient;
    return g;
}

GeneratorName GeneratorName::of(Symbol s, int e) {
    std::array<int, kNumSymbols> exps{};
    exps[static_cast<std::size_t>(s)] = e;
    return monomial(exps);
}

GeneratorName GeneratorName::tower(int j, int y) {
    GeneratorName g;
    g.kind_ = Kind::tower;
    g.tj_ = j;
    g.ty_ = y;
    return g;
}

GeneratorName GeneratorName::named(std::string label, Degree degree) {
    if (label.empty() || label.find_first_of(" \t[]:") != std::string::npos)
        throw RoqError("GeneratorName: bad label '" + label + "'");
    GeneratorName g;
    g.kind_ = Kind::named;
    g.label_ = std::move(label);
    g.named_degree_ = degree;
    return g;
}

Degree GeneratorName::degree() const {
    switch (kind_) {
        case Kind::tower:
            return {-2 * tj_ - 1, ty_};
        case Kind::named:
            return named_degree_;
        case Kind::monomial:
            break;
    }
    Degree d;
    for (std::size_t i = 0; i < kNumSymbols; ++i) d = d + kDegrees[i] * exps_[i];
    return d;
}

GeneratorName GeneratorName::operator*(const GeneratorName& o) const {
    if (kind_ != Kind::monomial || o.kind_ != Kind::monomial)
        throw RoqError("GeneratorName: only monomial names multiply");
    std::array<int, kNumSymbols> e{};
    for (std::size_t i = 0; i < kNumSymbols; ++i) e[i] = exps_[i] + o.exps_[i];
    return monomial(e, coefficient_ * o.coefficient_);
}

GeneratorName GeneratorName::with_coefficient(int c) const {
    GeneratorName g = *this;
    g.coefficient_ = c;
    return g;
}

std::string GeneratorName::text() const {
    if (kind_ == Kind::tower) return fmt::format("t({},{})", tj_, ty_);
    if (kind_ == Kind::named) return "[" + label_ + "]";
    std::string factors;
    for (std::size_t i = 0; i < kNumSymbols; ++i) {
        if (exps_[i] == 0) continue;
        if (!factors.empty()) factors += '*';
        factors += kTokens[i];
        if (exps_[i] != 1) factors += fmt::format("^{}", exps_[i]);
    }
    if (factors.empty()) return fmt::format("{}", coefficient_);
    if (coefficient_ == 1) return factors;
    if (coefficient_ == -1) return "-" + factors;
    return fmt::format("{}*{}", coefficient_, factors);
}

GeneratorName GeneratorName::parse(const std::string& text, Degree at) {
    if (text.empty()) throw ParseError("empty generator name");
    if (text.front() == '[') {
        if (text.back() != ']' || text.size() < 3) throw ParseError("bad named generator '" + text + "'");
        return named(text.substr(1, text.size() - 2), at);
    }
    if (text.rfind("t(", 0) == 0) {
        auto comma = text.find(',');
        if (comma == std::string::npos || text.back() != ')') throw ParseError("bad tower name '" + text + "'");
        int j = parse_int(text.substr(2, comma - 2), text);
        int y = parse_int(text.substr(comma + 1, text.size() - comma - 2), text);
        return tower(j, y);
    }
    std::array<int, kNumSymbols> exps{};
    int coeff = 1;
    std::string body = text;
    if (body.front() == '-' && body.size() > 1 && !std::isdigit(static_cast<unsigned char>(body[1]))) {
        coeff = -1;
        body = body.substr(1);
    }
    std::size_t pos = 0;
    bool first = true;
    while (pos <= body.size()) {
        auto star = body.find('*', pos);
        std::string tok = body.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        if (tok.empty()) throw ParseError("bad generator '" + text + "'");
        if (first && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-')) {
            coeff *= parse_int(tok, text);
        } else {
            auto caret = tok.find('^');
            std::string sym = tok.substr(0, caret);
            auto s = symbol_from_token(sym);
            if (!s) throw ParseError("unknown symbol '" + sym + "' in generator '" + text + "'");
            int e = caret == std::string::npos ? 1 : parse_int(tok.substr(caret + 1), text);
            exps[static_cast<std::size_t>(*s)] += e;
        }
        first = false;
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return monomial(exps, coeff);
}

const char* annotation_token(Annotation a) {
    switch (a) {
        case Annotation::square:
            return "square";
        case Annotation::circle:
            return "circle";
        case Annotation::dot:
            return "dot";
    }
    return "?";
}

std::optional<Annotation> annotation_from_token(const std::string& token) {
    if (token == "square") return Annotation::square;
    if (token == "circle") return Annotation::circle;
    if (token == "dot") return Annotation::dot;
    return std::nullopt;
}

}  // namespace roq
