#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "roq/grading/chart.hpp"

namespace roq {

struct RunConfig {
    std::string theory = "hz";       // hz | kr
    std::string pipeline = "closed";  // cells | tate | bockstein | closed
    Window window = Window::square(-12, 12);
    int padding = 4;
    std::string output;  // empty or "-" for stdout
    std::string format = "chart";  // chart | svg | text
    unsigned threads = 1;
    bool paranoid = false;
};

// UsageError for unknown names, cells with kr, bockstein with hz, an empty
// window, a negative padding or zero threads.
void validate(const RunConfig& cfg);

// The genuine chart on cfg.window. The kR Tate square settles its two-sided
// extensions against the closed form; the Bockstein pipeline settles its
// multi-floor extensions against the Tate chart.
Chart compute_chart(const RunConfig& cfg);

// With --paranoid: recomputes at twice the padding. Empty when the charts
// agree, otherwise a report of the differing degrees.
std::string padding_check(const RunConfig& cfg, const Chart& computed);

// Entry point of roqchart. Exit codes: 0 success, 1 verification or diff
// failure (and computation errors), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roq
