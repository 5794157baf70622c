#pragma once

#include <string>
#include <vector>

#include "roq/theories/lemmas.hpp"

namespace roq {

struct VerifyOptions {
    Window window = Window::square(-12, 12);
    int padding = 4;
    unsigned threads = 1;
    // Hand-transcribed kR chart compared in the cross suite when set.
    std::string golden;
};

struct VerifyOutcome {
    std::vector<CheckReport> reports;
    bool ok() const;
    std::string to_string() const;
};

// scope: all | gap | connectivity | cross | axes. UsageError otherwise.
VerifyOutcome run_verify(const std::string& scope, const VerifyOptions& opts);

// Degrees of w where the groups of a and b differ, as a report.
CheckReport compare_groups(const std::string& name, const Chart& a, const Chart& b, const Window& w);

}  // namespace roq
