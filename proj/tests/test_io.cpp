#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "roq/cells/bredon.hpp"
#include "roq/exact/hom.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/io/chart_diff.hpp"
#include "roq/io/chart_format.hpp"
#include "roq/io/render.hpp"
#include "roq/util/errors.hpp"

using namespace roq;

namespace {

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// A random homomorphism on standard generators.
IntMatrix random_hom(std::mt19937& rng, const FgAbelian& source, const FgAbelian& target) {
    IntMatrix m = IntMatrix::zero(target.num_generators(), source.num_generators());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer o = source.generator_order(j), t = target.generator_order(i);
            if (o == 0) m(i, j) = uniform(rng, -9, 9);
            else if (t != 0) m(i, j) = t / boost::multiprecision::gcd(o, t) * uniform(rng, -3, 3);
        }
    return m;
}

// Bare random groups, labeled entries borrowed from the closed forms, and
// random reduced structure maps between nonzero degrees.
Chart random_chart(std::mt19937& rng) {
    Window w{uniform(rng, -6, 0), uniform(rng, 0, 6), uniform(rng, -6, 0), uniform(rng, 0, 6)};
    Chart c(uniform(rng, 0, 1) ? "kr" : "hz", uniform(rng, 0, 1) ? "random" : "", w);
    Chart labeled = closed_form_kr(w);
    static const std::vector<Integer> orders = {2, 2, 2, 3, 4, 6, 8, Integer("340282366920938463463374607431768211456")};
    for (int x = w.x_min; x <= w.x_max; ++x) {
        for (int y = w.y_min; y <= w.y_max; ++y) {
            int roll = uniform(rng, 0, 9);
            if (roll < 4) continue;
            if (roll < 6 && labeled.entry_at({x, y})) {
                c.set_entry({x, y}, *labeled.entry_at({x, y}));
                continue;
            }
            std::vector<Integer> tors;
            for (int k = uniform(rng, 0, 2); k > 0; --k) tors.push_back(orders[uniform(rng, 0, orders.size() - 1)]);
            FgAbelian g = FgAbelian::free(uniform(rng, 0, 2)) + FgAbelian::from_cyclic(tors);
            if (!g.is_zero()) c.set_entry({x, y}, ChartEntry::bare(g));
        }
    }
    for (const std::string name : {"a", "vbar", "u"}) {
        for (const auto& [d, e] : c.entries()) {
            Degree t = d + map_degree(name);
            if (!w.contains(t) || !c.nonzero(t) || uniform(rng, 0, 2) == 0) continue;
            c.set_map(name, d, random_hom(rng, e.group, c.group_at(t)));
        }
        if (uniform(rng, 0, 1)) c.mark_complete(name);
    }
    return c;
}

std::size_t body_records(const std::string& doc) {
    std::size_t n = 0;
    for (std::size_t p = 0; (p = doc.find('\n', p)) != std::string::npos; ++p)
        if (doc.compare(p + 1, 6, "entry ") == 0 || doc.compare(p + 1, 4, "map ") == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("chart documents") {
    Chart hz = closed_form_hz(Window::square(-2, 2));
    std::string doc = serialize_chart(hz);
    CHECK(doc ==
          "roqchart 1\n"
          "theory hz\n"
          "pipeline closed\n"
          "window -2 2 -2 2\n"
          "maps a u\n"
          "entry -2 2 1 - 2*u^-1:circle\n"
          "entry 0 -2 0 2 a^2:dot\n"
          "entry 0 -1 0 2 a:dot\n"
          "entry 0 0 1 - 1:square\n"
          "entry 2 -2 1 - u:square\n"
          "map a 0 -1 [1]\n"
          "map a 0 0 [1]\n"
          "map u -2 2 [2]\n"
          "map u 0 0 [1]\n"
          "end\n");
    CHECK(body_records(doc) == 9);
    CHECK(parse_chart(doc) == hz);

    Chart empty("kr", "closed", Window::square(0, 3));
    CHECK(serialize_chart(empty) == "roqchart 1\ntheory kr\npipeline closed\nwindow 0 3 0 3\nmaps -\nend\n");
    CHECK(parse_chart(serialize_chart(empty)) == empty);

    for (const Chart& c : {closed_form_kr(Window::square(-12, 12)), cellular_chart_hz(Window::square(-6, 6)),
                           closed_form_hz_phi(Window::square(-5, 5))}) {
        std::string s = serialize_chart(c);
        CHECK(parse_chart(s) == c);
        CHECK(serialize_chart(parse_chart(s)) == s);
    }
}

TEST_CASE("round trip on random charts") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Chart c = random_chart(rng);
        std::string s = serialize_chart(c);
        Chart back = parse_chart(s);
        REQUIRE(back == c);
        REQUIRE(serialize_chart(back) == s);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_chart(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    const std::string head = "roqchart 1\ntheory hz\npipeline x\nwindow 0 2 0 2\nmaps -\n";
    CHECK(line_of("roqchart 2\n").find("line 1") != std::string::npos);
    CHECK(line_of(head + "entry 0 0 1 -\nentry 0 0 1 -\nend\n").find("line 7") != std::string::npos);
    CHECK(line_of(head + "entry 5 0 1 -\nend\n").find("line 6") != std::string::npos);
    CHECK(line_of(head + "entry 0 0 x -\nend\n").find("line 6") != std::string::npos);
    CHECK(line_of(head + "entry 0 0 1 - 1:triangle\nend\n").find("line 6") != std::string::npos);
    CHECK(line_of(head + "entry 0 0 1 -\nentry 0 1 0 2\nmap a 0 1 [1]\nend\n").find("line 8") != std::string::npos);
    CHECK(line_of(head + "entry 0 0 1 -\nentry 0 1 0 2\nmap a 0 1 [3]\nend\n").find("line 8") != std::string::npos);
    CHECK(line_of(head + "entry 0 0 1 -\nentry 0 1 0 2\nmap b 0 1 [1]\nend\n").find("line 8") != std::string::npos);
    CHECK(line_of(head + "entry 0 0 0 -\nend\n").find("line 6") != std::string::npos);
    CHECK(line_of(head + "entry 0 0 1 -\n").find("missing 'end'") != std::string::npos);
    CHECK(line_of(head + "end\nentry 0 0 1 -\n").find("after 'end'") != std::string::npos);
    CHECK(line_of(head + "end\n") == "no error");
    CHECK(line_of(head + "# a comment\n\nend\n") == "no error");
}

TEST_CASE("golden figure transcription") {
    Chart fig = read_chart_file(std::string(ROQ_GOLDEN_DIR) + "/kr_figure.chart");
    CHECK(fig.window() == Window::square(-6, 6));
    ChartDiff d = diff_charts(fig, closed_form_kr(fig.window()));
    CHECK(d.groups.empty());
    CHECK(d.warning.empty());
}

TEST_CASE("renders") {
    Chart hz = closed_form_hz(Window::square(-4, 4));
    std::string svg = render_svg(hz);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("Z·1") != std::string::npos);
    CHECK(svg.find("Z·σ") != std::string::npos);
    // (0,0) sits at cell (4+2, 4+2) of a 24 px grid: centre (156,156)
    CHECK(svg.find("<rect x=\"151\" y=\"151\" width=\"10\" height=\"10\"") != std::string::npos);
    // dot column below the unit
    for (int y = 1; y <= 4; ++y)
        CHECK(svg.find(fmt::format("<circle cx=\"156\" cy=\"{}\" r=\"3\" fill=\"red\"/>", 156 + 24 * y)) !=
              std::string::npos);
    CHECK(render_svg(hz) == svg);

    Chart empty("hz", "closed", Window::square(-2, 2));
    std::string esvg = render_svg(empty);
    CHECK(esvg.find("<rect x=\"") != std::string::npos);  // background only
    CHECK(esvg.find("<circle") == std::string::npos);
    CHECK(esvg.find("Z·1") != std::string::npos);

    std::string text = render_text(closed_form_hz(Window::square(-2, 2)));
    CHECK(text ==
          "hz (closed) -2..2,-2..2\n"
          "      Z·σ\n"
          "    2 ○ |\n"
          "    1   |\n"
          "    0 --□--\n"
          "   -1   ·\n"
          "   -2   · □\n"
          "        ^  Z·1\n"
          "      x from -2 to 2, ticks at multiples of 4\n");

    Chart fig = read_chart_file(std::string(ROQ_GOLDEN_DIR) + "/kr_figure.chart");
    std::string golden;
    {
        std::ifstream in(std::string(ROQ_GOLDEN_DIR) + "/kr_figure.txt");
        std::stringstream ss;
        ss << in.rdbuf();
        golden = ss.str();
    }
    CHECK(render_text(fig) == golden);
    CHECK_THROWS_AS(parse_render_format("png"), UsageError);
}

TEST_CASE("chart diffs") {
    Window w = Window::square(-12, 12);
    Chart hz = closed_form_hz(w);
    CHECK(diff_charts(hz, hz).empty());
    CHECK(diff_charts(hz, cellular_chart_hz(w)).groups.empty());

    ChartDiff d = diff_charts(hz, closed_form_kr(w));
    REQUIRE_FALSE(d.groups.empty());
    CHECK(d.groups.front().degree == Degree{1, 0});
    CHECK(d.groups.front().left.is_zero());
    CHECK(d.groups.front().right == FgAbelian::cyclic(2));
    ChartDiff r = diff_charts(closed_form_kr(w), hz);
    REQUIRE(r.groups.size() == d.groups.size());
    for (std::size_t i = 0; i < d.groups.size(); ++i) {
        CHECK(r.groups[i].degree == d.groups[i].degree);
        CHECK(r.groups[i].left == d.groups[i].right);
    }

    // bare against labeled: groups only
    CHECK(diff_charts(hz.bare(), hz).empty());
    // annotation-only change
    Chart relabeled = hz;
    ChartEntry e = *hz.entry_at({2, -2});
    e.gens[0].annotation = Annotation::circle;
    relabeled.set_entry({2, -2}, e);
    ChartDiff l = diff_charts(hz, relabeled);
    CHECK(l.groups.empty());
    REQUIRE(l.labels.size() == 1);
    CHECK(l.labels[0].degree == Degree{2, -2});

    ChartDiff m = diff_charts(closed_form_hz(Window::square(-3, 3)), closed_form_hz(Window::square(0, 5)));
    CHECK_FALSE(m.warning.empty());
    CHECK(m.compared == Window::square(0, 3));
    CHECK(m.empty());
}
