#pragma once

#include <utility>
#include <vector>

#include "roq/exact/fg_abelian.hpp"
#include "roq/grading/chart.hpp"

namespace roq {

// Row y = b of HZ^Q: for b <= 0 the entry at (k, b) is H^Q_k(S^{|b| sigma}),
// for b > 0 the entry at (-k, b) is H_Q^k(S^{b sigma}). Only x in
// [x_min, x_max] is reported; zero groups are omitted.
std::vector<std::pair<Degree, FgAbelian>> bredon_row(int b, int x_min, int x_max);

// The rows over the window with multiplication by a induced by the
// inclusions S^{n sigma} -> S^{(n+1) sigma}.
Chart cellular_chart_hz(const Window& window, unsigned threads = 1);

// Reduced integral cohomology of S^0 * RP^n from the classical table,
// compared with bredon_row(n + 1).
bool quotient_row_check(int n);
std::vector<std::pair<int, FgAbelian>> join_rp_cohomology(int n);

// H~_k of the orbit space S^{n sigma}/Q.
FgAbelian quotient_homology(int n, int k);

}  // namespace roq
