#pragma once

#include <string>

#include "roq/theories/seed.hpp"

namespace roq {

// Line format, '#' starts a comment:
//   roqseed 1
//   theory kr
//   generator lambda 0 1 -1 invertible
//   differential 3 gens a vbar u=lambda^2 : u -> vbar*a^3 ; ...
//   multiplier U = lambda^4
//   connective yes
//   closed-form kr
// ParseError messages carry the line number.
TheorySeed parse_seed(const std::string& text);
std::string serialize_seed(const TheorySeed& seed);

}  // namespace roq
