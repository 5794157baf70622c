#pragma once

#include <utility>
#include <vector>

#include "roq/theories/bockstein.hpp"

namespace roq {

// SSS Adams coordinates (x_S, y_S) = (n, s) and BSS boxes (x_B, y_B) =
// (total degree, floor). bockstein_box throws RoqError when n + s is odd.
std::pair<int, int> bockstein_box(int xs, int ys);
std::pair<int, int> slice_coordinates(int xb, int yb);

struct SliceEntry {
    int n = 0;
    int s = 0;
    FgAbelian e1;    // HZ^Q_{k-s-k sigma} on floor k = (n+s)/2
    FgAbelian einf;  // its E-infinity survivor
};

// Entry of the integer-graded SSS; zero for odd n + s or negative floors.
SliceEntry slice_entry(const BocksteinResult& bss, int n, int s);

// SSS entries for n in [n_min, n_max], s in [0, s_max], n + s even.
std::vector<SliceEntry> slice_table(const BocksteinResult& bss, int n_min, int n_max, int s_max);

// BSS boxes (n0 + k, k), k = 0 .. length-1, as SSS entries.
std::vector<SliceEntry> blob_diagonal(const BocksteinResult& bss, int n0, int length);

}  // namespace roq
