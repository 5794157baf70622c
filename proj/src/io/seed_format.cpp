#include "roq/io/seed_format.hpp"

#include <sstream>

#include <boost/algorithm/string.hpp>
#include <fmt/format.h>

#include "roq/util/errors.hpp"

namespace roq {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError(fmt::format("seed line {}: {}", line, msg));
}

int to_int(int line, const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size()) return v;
    } catch (...) {
    }
    fail(line, "expected an integer, got '" + s + "'");
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::string page_generator_text(const Alphabet& alpha, const PageGenerator& g) {
    if (g.power == 1 && alpha[g.base].name == g.name) return g.name;
    return g.name + "=" + alpha.format(alpha.power(g.base, g.power));
}

}  // namespace

TheorySeed parse_seed(const std::string& text) {
    TheorySeed seed;
    std::vector<GeneratorSpec> gens;
    // Differentials and multipliers need the full alphabet; keep them until
    // the generator lines are in.
    std::vector<std::pair<int, std::string>> diff_lines, mult_lines;
    bool header = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        boost::trim(line);
        if (line.empty()) continue;
        auto w = words(line);
        if (!header) {
            if (w.size() != 2 || w[0] != "roqseed") fail(lineno, "expected 'roqseed 1'");
            if (w[1] != "1") fail(lineno, "unsupported seed version " + w[1]);
            header = true;
            continue;
        }
        const std::string& key = w[0];
        if (key == "theory") {
            if (w.size() != 2) fail(lineno, "theory takes one name");
            seed.name = w[1];
        } else if (key == "generator") {
            if (w.size() != 5 && w.size() != 6) fail(lineno, "generator name s t b [invertible]");
            if (w.size() == 6 && w[5] != "invertible") fail(lineno, "unknown generator flag '" + w[5] + "'");
            gens.push_back({w[1], {to_int(lineno, w[2]), to_int(lineno, w[3]), to_int(lineno, w[4])}, w.size() == 6});
        } else if (key == "differential") {
            diff_lines.emplace_back(lineno, line);
        } else if (key == "multiplier") {
            mult_lines.emplace_back(lineno, line);
        } else if (key == "connective") {
            if (w.size() != 2 || (w[1] != "yes" && w[1] != "no")) fail(lineno, "connective yes|no");
            seed.connective = w[1] == "yes";
        } else if (key == "closed-form") {
            if (w.size() != 2) fail(lineno, "closed-form takes one name");
            seed.closed_form = w[1];
        } else {
            fail(lineno, "unknown keyword '" + key + "'");
        }
    }
    if (!header) throw ParseError("seed: missing 'roqseed 1' header");
    try {
        seed.alphabet = Alphabet(gens);
    } catch (const ParseError& e) {
        throw ParseError(std::string("seed: ") + e.what());
    }
    const Alphabet& alpha = seed.alphabet;

    for (const auto& [ln, line] : diff_lines) {
        auto colon = line.find(':');
        if (colon == std::string::npos) fail(ln, "differential needs ':' before the assignments");
        auto head = words(line.substr(0, colon));
        if (head.size() < 3 || head[2] != "gens") fail(ln, "differential r gens g1 g2 ... : g -> image");
        DifferentialSpec d;
        d.r = to_int(ln, head[1]);
        if (d.r < 1) fail(ln, "differential page must be positive");
        try {
            for (std::size_t i = 3; i < head.size(); ++i) d.gens.push_back(parse_page_generator(alpha, head[i]));
            std::vector<std::string> assigns;
            std::string rest = line.substr(colon + 1);
            boost::split(assigns, rest, boost::is_any_of(";"));
            for (auto a : assigns) {
                boost::trim(a);
                if (a.empty()) continue;
                auto arrow = a.find("->");
                if (arrow == std::string::npos) fail(ln, "assignment needs '->'");
                std::string name = boost::trim_copy(a.substr(0, arrow));
                d.images[name] = parse_polynomial(alpha, a.substr(arrow + 2), d.gens);
            }
        } catch (const ParseError& e) {
            if (std::string(e.what()).rfind("seed line", 0) == 0) throw;
            fail(ln, e.what());
        }
        if (!seed.differentials.empty() && seed.differentials.back().r >= d.r)
            fail(ln, "differentials must be listed by increasing page");
        seed.differentials.push_back(std::move(d));
    }

    for (const auto& [ln, line] : mult_lines) {
        auto w = words(line);
        if (w.size() != 4 || w[2] != "=") fail(ln, "multiplier name = monomial");
        if (!is_map_name(w[1])) fail(ln, "unknown structure map '" + w[1] + "'");
        try {
            Polynomial p = parse_polynomial(alpha, w[3]);
            if (p.terms().size() != 1 || p.terms().begin()->second != 1) fail(ln, "multiplier must be a monomial");
            seed.multipliers.push_back({w[1], p.terms().begin()->first});
        } catch (const ParseError& e) {
            if (std::string(e.what()).rfind("seed line", 0) == 0) throw;
            fail(ln, e.what());
        }
    }
    return seed;
}

std::string serialize_seed(const TheorySeed& seed) {
    const Alphabet& alpha = seed.alphabet;
    std::string out = "roqseed 1\n";
    if (!seed.name.empty()) out += "theory " + seed.name + "\n";
    for (const auto& g : alpha.generators())
        out += fmt::format("generator {} {} {} {}{}\n", g.name, g.degree.s, g.degree.t, g.degree.b,
                           g.invertible ? " invertible" : "");
    for (const auto& d : seed.differentials) {
        out += fmt::format("differential {} gens", d.r);
        for (const auto& g : d.gens) out += " " + page_generator_text(alpha, g);
        out += " :";
        bool first = true;
        for (const auto& [name, img] : d.images) {
            out += first ? " " : " ; ";
            first = false;
            std::string p = img.format(alpha);
            boost::erase_all(p, " ");
            out += name + " -> " + p;
        }
        out += "\n";
    }
    for (const auto& m : seed.multipliers) out += "multiplier " + m.map_name + " = " + alpha.format(m.monomial) + "\n";
    out += std::string("connective ") + (seed.connective ? "yes" : "no") + "\n";
    if (!seed.closed_form.empty()) out += "closed-form " + seed.closed_form + "\n";
    return out;
}

}  // namespace roq
