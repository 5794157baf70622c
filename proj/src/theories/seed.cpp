#include "roq/theories/seed.hpp"

#include <algorithm>

#include "roq/grading/closed_form.hpp"
#include "roq/io/seed_format.hpp"
#include "roq/util/errors.hpp"

namespace roq {

int TheorySeed::reach() const {
    int r = 1;
    for (const auto& d : differentials) r = std::max(r, d.r);
    return r;
}

Chart TheorySeed::reference(const Window& w) const {
    if (closed_form == "hz") return closed_form_hz(w);
    if (closed_form == "kr") return closed_form_kr(w);
    throw UnsupportedError("theory " + name + " has no closed form");
}

const std::string& hz_seed_text() {
    static const std::string text = R"(roqseed 1
theory hz
generator a -1 1 -1
generator lambda 0 1 -1 invertible
differential 1 gens a lambda : lambda -> 2*a
multiplier a = a
multiplier u = lambda^2
connective yes
closed-form hz
)";
    return text;
}

const std::string& kr_seed_text() {
    // u -> vbar a^3 is forced by eta^4 = 0; it is input, not derived.
    static const std::string text = R"(roqseed 1
theory kr
generator a -1 1 -1
generator lambda 0 1 -1 invertible
generator vbar 0 1 1
differential 1 gens a lambda vbar : lambda -> 2*a
differential 3 gens a vbar u=lambda^2 : u -> vbar*a^3
multiplier a = a
multiplier vbar = vbar
multiplier U = lambda^4
connective yes
closed-form kr
)";
    return text;
}

TheorySeed hz_seed() { return parse_seed(hz_seed_text()); }
TheorySeed kr_seed() { return parse_seed(kr_seed_text()); }

TheorySeed seed_for(const std::string& theory) {
    if (theory == "hz") return hz_seed();
    if (theory == "kr") return kr_seed();
    throw UsageError("unknown theory '" + theory + "'");
}

}  // namespace roq
