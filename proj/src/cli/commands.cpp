#include "roq/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "roq/cells/bredon.hpp"
#include "roq/cli/verify.hpp"
#include "roq/grading/closed_form.hpp"
#include "roq/io/chart_diff.hpp"
#include "roq/io/chart_format.hpp"
#include "roq/io/render.hpp"
#include "roq/tate/tate_square.hpp"
#include "roq/theories/bockstein.hpp"
#include "roq/theories/hfpss.hpp"
#include "roq/util/errors.hpp"

namespace roq {

namespace {

Chart tate_chart(const std::string& theory, const Window& w, int padding, unsigned threads) {
    TheorySeed seed = seed_for(theory);
    HfpssResult h = run_hfpss(seed, w, {padding, threads});
    ExtensionResolver resolver;
    if (theory == "kr") resolver = chart_resolver(seed.reference(w.padded(1)));
    return run_tate_square(h.hfp, w, resolver).genuine;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw RoqError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path.empty() || path == "-")
        out << bytes;
    else
        write_text_file(path, bytes);
}

std::string format_chart(const Chart& c, const std::string& format) {
    if (format == "chart") return serialize_chart(c);
    return render(c, parse_render_format(format));
}

Window window_option(const std::string& text) {
    try {
        return Window::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--window: ") + e.what());
    }
}

}  // namespace

void validate(const RunConfig& cfg) {
    if (cfg.theory != "hz" && cfg.theory != "kr") throw UsageError("unknown theory '" + cfg.theory + "'");
    if (cfg.pipeline != "cells" && cfg.pipeline != "tate" && cfg.pipeline != "bockstein" && cfg.pipeline != "closed")
        throw UsageError("unknown pipeline '" + cfg.pipeline + "'");
    if (cfg.pipeline == "cells" && cfg.theory != "hz") throw UsageError("the cells pipeline computes hz only");
    if (cfg.pipeline == "bockstein" && cfg.theory != "kr") throw UsageError("the bockstein pipeline computes kr only");
    if (cfg.window.empty()) throw UsageError("empty window");
    if (cfg.padding < 0) throw UsageError("negative padding");
    if (cfg.threads == 0) throw UsageError("--threads must be positive");
    if (cfg.format != "chart" && cfg.format != "svg" && cfg.format != "text")
        throw UsageError("unknown format '" + cfg.format + "'");
}

Chart compute_chart(const RunConfig& cfg) {
    validate(cfg);
    const Window& w = cfg.window;
    if (cfg.pipeline == "closed") return cfg.theory == "hz" ? closed_form_hz(w) : closed_form_kr(w);
    if (cfg.pipeline == "cells") return cellular_chart_hz(w, cfg.threads);
    if (cfg.pipeline == "tate") return tate_chart(cfg.theory, w, cfg.padding, cfg.threads);
    Chart tate = tate_chart("kr", w, cfg.padding, cfg.threads);
    return run_bockstein(w, cfg.padding, chart_resolver(tate)).chart;
}

std::string padding_check(const RunConfig& cfg, const Chart& computed) {
    RunConfig twice = cfg;
    twice.padding = std::max(1, 2 * cfg.padding);
    ChartDiff d = diff_charts(computed.bare(), compute_chart(twice).bare());
    if (d.groups.empty()) return {};
    return fmt::format("padding {} and {} disagree\n{}", cfg.padding, twice.padding, d.to_string());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coefficient charts of RO(Q)-graded theories", "roqchart"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string window_text = "-12..12";
    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--window", window_text, "x0..x1[,y0..y1]")->capture_default_str();
        sub->add_option("--padding", cfg.padding, "extra degrees computed around the window")->capture_default_str();
        sub->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
        sub->add_flag("--paranoid", cfg.paranoid, "repeat at twice the padding and compare");
    };

    auto* compute = app.add_subcommand("compute", "compute a chart");
    compute->add_option("--theory", cfg.theory, "hz | kr")->required();
    compute->add_option("--pipeline", cfg.pipeline, "cells | tate | bockstein | closed")->required();
    compute->add_option("--output", cfg.output, "output file (default stdout)");
    compute->add_option("--format", cfg.format, "chart | svg | text")->capture_default_str();
    add_run_flags(compute);

    std::string scope;
    std::string golden;
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("scope", scope, "all | gap | connectivity | cross | axes")->required();
    verify->add_option("--golden", golden, "hand-transcribed kr chart for the cross suite");
    add_run_flags(verify);

    std::string input;
    std::string render_format = "svg";
    std::string render_output;
    auto* rend = app.add_subcommand("render", "render a chart file");
    rend->add_option("file", input, "chart file or - for stdin")->required();
    rend->add_option("--format", render_format, "svg | text")->capture_default_str();
    rend->add_option("--output", render_output, "output file (default stdout)");

    std::string left, right;
    auto* dif = app.add_subcommand("diff", "compare two chart files");
    dif->add_option("first", left)->required();
    dif->add_option("second", right)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            cfg.window = window_option(window_text);
            validate(cfg);
            Chart c = compute_chart(cfg);
            if (cfg.paranoid) {
                std::string report = padding_check(cfg, c);
                if (!report.empty()) {
                    err << report;
                    return 1;
                }
            }
            emit(cfg.output, format_chart(c, cfg.format), out);
            return 0;
        }
        if (*verify) {
            VerifyOptions opts;
            opts.window = window_option(window_text);
            opts.padding = cfg.padding;
            opts.threads = cfg.threads;
            opts.golden = golden;
            RunConfig check = cfg;
            check.window = opts.window;
            validate(check);
            VerifyOutcome r = run_verify(scope, opts);
            out << r.to_string();
            bool ok = r.ok();
            if (cfg.paranoid) {
                for (const std::string theory : {"hz", "kr"}) {
                    check.theory = theory;
                    check.pipeline = "tate";
                    std::string report = padding_check(check, compute_chart(check));
                    out << "paranoid " << theory << ": " << (report.empty() ? "pass\n" : report);
                    ok = ok && report.empty();
                }
            }
            return ok ? 0 : 1;
        }
        if (*rend) {
            RenderFormat f = parse_render_format(render_format);
            emit(render_output, render(parse_chart(read_input(input)), f), out);
            return 0;
        }
        ChartDiff d = diff_charts(parse_chart(read_input(left)), parse_chart(read_input(right)));
        out << d.to_string();
        return d.groups.empty() ? 0 : 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace roq
