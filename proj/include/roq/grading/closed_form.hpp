#pragma once

#include "roq/grading/chart.hpp"

namespace roq {

// BB[u] + u^-1 NB[u^-1] for HZ, with maps a and u.
Chart closed_form_hz(const Window& window);

// BB[U] + U^-1 NB[U^-1] for kR, with maps a, vbar and U.
Chart closed_form_kr(const Window& window);

// F_2[a, a^-1][u]: the geometric fixed points of HZ, labelled a^k u^j.
Chart closed_form_hz_phi(const Window& window);

// Whether g names a class of closed_form_hz (ignoring windows).
bool hz_generator_exists(const GeneratorName& g);

}  // namespace roq
