#include "roq/io/chart_format.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <fmt/format.h>

#include "roq/exact/hom.hpp"
#include "roq/util/errors.hpp"

namespace roq {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError(fmt::format("chart line {}: {}", line, msg));
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

Integer to_integer(int line, const std::string& s) {
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || s.find('-', 1) != std::string::npos)
        fail(line, "expected an integer, got '" + s + "'");
    try {
        return Integer(s);
    } catch (...) {
        fail(line, "expected an integer, got '" + s + "'");
    }
}

IntMatrix parse_matrix(int line, const std::string& s, std::size_t rows, std::size_t cols) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(line, "matrix must be written [..;..]");
    std::string body = s.substr(1, s.size() - 2);
    IntMatrix m = IntMatrix::zero(rows, cols);
    if (body.empty()) {
        if (rows * cols != 0) fail(line, "empty matrix for a nonzero map");
        return m;
    }
    std::vector<std::string> rs;
    boost::split(rs, body, boost::is_any_of(";"));
    if (rs.size() != rows) fail(line, fmt::format("matrix has {} rows, expected {}", rs.size(), rows));
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<std::string> cs;
        boost::split(cs, rs[i], boost::is_any_of(","));
        if (cs.size() != cols) fail(line, fmt::format("matrix row {} has {} entries, expected {}", i, cs.size(), cols));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_integer(line, cs[j]);
    }
    return m;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

}  // namespace

std::string serialize_chart(const Chart& c) {
    std::string out = "roqchart 1\n";
    out += "theory " + (c.theory().empty() ? std::string("-") : c.theory()) + "\n";
    out += "pipeline " + (c.pipeline().empty() ? std::string("-") : c.pipeline()) + "\n";
    const Window& w = c.window();
    out += fmt::format("window {} {} {} {}\n", w.x_min, w.x_max, w.y_min, w.y_max);
    out += "maps";
    if (c.complete_maps().empty()) out += " -";
    for (const auto& m : c.complete_maps()) out += " " + m;
    out += "\n";
    for (const auto& [d, e] : c.entries()) {
        out += fmt::format("entry {} {} {} ", d.x, d.y, e.group.rank());
        if (e.group.torsion().empty()) {
            out += "-";
        } else {
            for (std::size_t i = 0; i < e.group.torsion().size(); ++i)
                out += (i ? "," : "") + roq::to_string(e.group.torsion()[i]);
        }
        for (const auto& g : e.gens) out += fmt::format(" {}:{}", g.name.text(), annotation_token(g.annotation));
        out += "\n";
    }
    for (const auto& [key, m] : c.maps())
        out += fmt::format("map {} {} {} {}\n", key.first, key.second.x, key.second.y, m.to_string());
    out += "end\n";
    return out;
}

Chart parse_chart(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto next = [&](std::vector<std::string>& w) {
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = boost::trim_copy(raw);
            if (line.empty() || line[0] == '#') continue;
            w = words(line);
            return true;
        }
        return false;
    };
    std::vector<std::string> w;
    auto expect = [&](const std::string& key, std::size_t n) {
        if (!next(w)) fail(lineno + 1, "unexpected end of input, expected '" + key + "'");
        if (w[0] != key || (n && w.size() != n)) fail(lineno, "expected '" + key + "' line");
    };
    expect("roqchart", 2);
    if (w[1] != "1") fail(lineno, "unsupported chart version " + w[1]);
    expect("theory", 2);
    std::string theory = w[1] == "-" ? "" : w[1];
    expect("pipeline", 2);
    std::string pipeline = w[1] == "-" ? "" : w[1];
    expect("window", 5);
    Window win{to_int(lineno, w[1]), to_int(lineno, w[2]), to_int(lineno, w[3]), to_int(lineno, w[4])};
    expect("maps", 0);
    std::vector<std::string> complete(w.begin() + 1, w.end());
    if (complete.empty()) fail(lineno, "maps line needs names or '-'");
    if (complete.size() == 1 && complete[0] == "-") complete.clear();

    Chart c(theory, pipeline, win);
    for (const auto& m : complete) {
        if (!is_map_name(m)) fail(lineno, "unknown map '" + m + "'");
        c.mark_complete(m);
    }
    bool ended = false;
    std::optional<Degree> last_entry;
    while (next(w)) {
        if (w[0] == "end") {
            if (w.size() != 1) fail(lineno, "trailing text after 'end'");
            ended = true;
            break;
        }
        try {
            if (w[0] == "entry") {
                if (w.size() < 5) fail(lineno, "entry x y rank torsion|- [labels]");
                Degree d{to_int(lineno, w[1]), to_int(lineno, w[2])};
                if (last_entry && !(*last_entry < d)) fail(lineno, "entries must be sorted by (x, y) without repeats");
                last_entry = d;
                int rank = to_int(lineno, w[3]);
                if (rank < 0) fail(lineno, "negative rank");
                std::vector<Integer> tors;
                if (w[4] != "-") {
                    std::vector<std::string> ts;
                    boost::split(ts, w[4], boost::is_any_of(","));
                    for (const auto& t : ts) tors.push_back(to_integer(lineno, t));
                }
                ChartEntry e{FgAbelian(static_cast<std::size_t>(rank), tors), {}};
                if (e.group.is_zero()) fail(lineno, "zero groups are not listed");
                for (std::size_t i = 5; i < w.size(); ++i) {
                    auto colon = w[i].rfind(':');
                    if (colon == std::string::npos) fail(lineno, "label needs ':annotation'");
                    auto ann = annotation_from_token(w[i].substr(colon + 1));
                    if (!ann) fail(lineno, "unknown annotation '" + w[i].substr(colon + 1) + "'");
                    e.gens.push_back({GeneratorName::parse(w[i].substr(0, colon), d), *ann});
                }
                if (!e.gens.empty() && !e.consistent()) fail(lineno, "labels do not match the group");
                c.set_entry(d, std::move(e));
            } else if (w[0] == "map") {
                if (w.size() != 5) fail(lineno, "map name x y [matrix]");
                if (!is_map_name(w[1])) fail(lineno, "unknown map '" + w[1] + "'");
                Degree d{to_int(lineno, w[2]), to_int(lineno, w[3])};
                Degree t = d + map_degree(w[1]);
                if (!win.contains(d) || !win.contains(t)) fail(lineno, "map leaves the window");
                IntMatrix m = parse_matrix(lineno, w[4], c.group_at(t).num_generators(), c.group_at(d).num_generators());
                if (!(reduce_to_target(m, c.group_at(t)) == m)) fail(lineno, "map entries must be reduced");
                c.set_map(w[1], d, m);
            } else {
                fail(lineno, "unknown record '" + w[0] + "'");
            }
        } catch (const ParseError& e) {
            if (std::string(e.what()).rfind("chart line", 0) == 0) throw;
            fail(lineno, e.what());
        } catch (const RoqError& e) {
            fail(lineno, e.what());
        }
    }
    if (!ended) fail(lineno, "missing 'end'");
    if (next(w)) fail(lineno, "text after 'end'");
    return c;
}

Chart read_chart_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RoqError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_chart(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RoqError("cannot write " + path);
    out << text;
    if (!out) throw RoqError("failed writing " + path);
}

}  // namespace roq
