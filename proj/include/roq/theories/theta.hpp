#pragma once

#include <optional>

#include "roq/grading/chart.hpp"

namespace roq {

// theta : HZ -> Sigma^{2+sigma} HZ lowers degrees by (2,1).
inline constexpr Degree kThetaDegree{-2, -1};

// theta on a class named as in closed_form_hz (or closed_form_hz_phi):
// a^k u^j -> a^{k+3} u^{j-1} for odd j, towers t(j,y) -> t(j+1,y-1) for
// odd j, everything else 0. The rule ignores whether the image exists.
std::optional<GeneratorName> theta_rule(const GeneratorName& m);

// theta_rule restricted to generators of closed_form_hz: nullopt when the
// image is not a class. RoqError for names that are not generators.
std::optional<GeneratorName> theta_apply(const GeneratorName& m);

// Matrix of theta from the entry at d to the entry at d + kThetaDegree of
// a labelled chart; images missing from the target count as zero.
IntMatrix theta_matrix(const Chart& c, const Degree& d);

}  // namespace roq
