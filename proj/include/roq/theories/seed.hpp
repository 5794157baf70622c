#pragma once

#include <string>
#include <vector>

#include "roq/grading/chart.hpp"
#include "roq/specseq/monomial.hpp"

namespace roq {

// An hfpss presentation: E1 alphabet, differentials by page and the
// chart structure maps as multiplication by monomials.
struct TheorySeed {
    std::string name;
    Alphabet alphabet;
    std::vector<DifferentialSpec> differentials;  // ascending r
    std::vector<Multiplier> multipliers;
    bool connective = false;
    std::string closed_form;  // "hz", "kr" or empty

    // Largest seeded page, at least 1.
    int reach() const;
    // The closed-form chart named by closed_form; UnsupportedError if none.
    Chart reference(const Window& w) const;
};

const std::string& hz_seed_text();
const std::string& kr_seed_text();
TheorySeed hz_seed();
TheorySeed kr_seed();
// "hz" or "kr"; UsageError otherwise.
TheorySeed seed_for(const std::string& theory);

}  // namespace roq
