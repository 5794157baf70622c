#include "roq/specseq/monomial.hpp"

#include <boost/algorithm/string.hpp>
#include <fmt/format.h>

#include "roq/util/errors.hpp"

namespace roq {

std::string TriDegree::to_string() const { return fmt::format("({},{},{})", s, t, b); }

Alphabet::Alphabet(std::vector<GeneratorSpec> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name.empty()) throw ParseError("alphabet: empty generator name");
        for (std::size_t j = 0; j < i; ++j)
            if (gens_[j].name == gens_[i].name) throw ParseError("alphabet: duplicate generator " + gens_[i].name);
    }
}

std::size_t Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    throw ParseError("unknown generator '" + name + "'");
}

bool Alphabet::contains(const std::string& name) const {
    for (const auto& g : gens_)
        if (g.name == name) return true;
    return false;
}

TriDegree Alphabet::degree(const Exponents& e) const {
    TriDegree d;
    for (std::size_t i = 0; i < gens_.size(); ++i) d = d + gens_[i].degree * e.at(i);
    return d;
}

bool Alphabet::valid(const Exponents& e) const {
    if (e.size() != gens_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !gens_[i].invertible) return false;
    return true;
}

Exponents Alphabet::power(std::size_t gen, int k) const {
    Exponents e = unit();
    e.at(gen) = k;
    return e;
}

std::string Alphabet::format(const Exponents& e) const {
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += gens_[i].name;
        if (e[i] != 1) out += fmt::format("^{}", e[i]);
    }
    return out.empty() ? "1" : out;
}

Exponents multiply(const Exponents& l, const Exponents& r) {
    Exponents out(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) out[i] = l[i] + r.at(i);
    return out;
}

Polynomial Polynomial::monomial(Exponents e, Integer c) {
    Polynomial p;
    p.add(e, c);
    return p;
}

void Polynomial::add(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add(e, c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add(multiply(e1, e2), c1 * c2);
    return out;
}

Polynomial Polynomial::scaled(const Integer& c) const {
    Polynomial out;
    for (const auto& [e, v] : terms_) out.add(e, v * c);
    return out;
}

TriDegree Polynomial::degree(const Alphabet& alpha) const {
    if (terms_.empty()) throw DegreeMismatchError("zero polynomial has no degree");
    TriDegree d = alpha.degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (alpha.degree(e) != d) throw DegreeMismatchError("inhomogeneous polynomial " + format(alpha));
    return d;
}

std::string Polynomial::format(const Alphabet& alpha) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        std::string m = alpha.format(e);
        if (mag == 1) out += m;
        else out += m == "1" ? roq::to_string(mag) : roq::to_string(mag) + "*" + m;
    }
    return out;
}

namespace {

int parse_int(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw ParseError("");
        return v;
    } catch (...) {
        throw ParseError("bad integer '" + s + "' in '" + context + "'");
    }
}

// name^k factor, resolved against alphabet or page generators.
Exponents parse_factor(const Alphabet& alpha, const std::string& f, const std::vector<PageGenerator>& page_gens,
                       const std::string& context) {
    std::string name = f;
    int k = 1;
    auto caret = f.find('^');
    if (caret != std::string::npos) {
        name = f.substr(0, caret);
        k = parse_int(f.substr(caret + 1), context);
    }
    if (alpha.contains(name)) return alpha.power(alpha.index_of(name), k);
    for (const auto& pg : page_gens)
        if (pg.name == name) return alpha.power(pg.base, pg.power * k);
    throw ParseError("unknown generator '" + name + "' in '" + context + "'");
}

}  // namespace

PageGenerator parse_page_generator(const Alphabet& alpha, const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) return {text, alpha.index_of(text), 1};
    std::string name = text.substr(0, eq);
    Exponents e = parse_factor(alpha, text.substr(eq + 1), {}, text);
    std::size_t base = alpha.size();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) {
            if (base != alpha.size()) throw ParseError("page generator must be a power of one generator: " + text);
            base = i;
        }
    if (name.empty() || base == alpha.size()) throw ParseError("bad page generator '" + text + "'");
    return {name, base, e[base]};
}

Polynomial parse_polynomial(const Alphabet& alpha, const std::string& text, const std::vector<PageGenerator>& page_gens) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial");
    // Split into signed terms; a sign right after '^' belongs to an exponent.
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && (i == 0 || s[i - 1] != '^')) {
            if (!cur.empty()) terms.emplace_back(sign, cur);
            else if (i != 0) throw ParseError("malformed polynomial '" + text + "'");
            sign = ch == '-' ? -1 : 1;
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (cur.empty()) throw ParseError("malformed polynomial '" + text + "'");
    terms.emplace_back(sign, cur);

    Polynomial out;
    for (const auto& [sg, term] : terms) {
        std::vector<std::string> factors;
        boost::split(factors, term, boost::is_any_of("*"));
        Integer coeff = sg;
        Exponents e = alpha.unit();
        for (const auto& f : factors) {
            if (f.empty()) throw ParseError("malformed term '" + term + "'");
            if (std::isdigit(static_cast<unsigned char>(f[0])))
                coeff *= parse_int(f, text);
            else
                e = multiply(e, parse_factor(alpha, f, page_gens, text));
        }
        out.add(e, coeff);
    }
    return out;
}

}  // namespace roq
