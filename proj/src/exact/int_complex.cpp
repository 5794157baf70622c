#include "roq/exact/int_complex.hpp"

#include <fmt/format.h>

#include "roq/util/errors.hpp"

namespace roq {

IntComplex::IntComplex(int bottom, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : bottom_(bottom), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty()) {
        if (!boundaries_.empty()) throw RoqError("IntComplex: boundaries without groups");
        return;
    }
    if (boundaries_.size() + 1 != ranks_.size())
        throw RoqError("IntComplex: need exactly one boundary between consecutive groups");
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        const auto& d = boundaries_[i];
        if (d.rows() != ranks_[i] || d.cols() != ranks_[i + 1])
            throw RoqError(fmt::format("IntComplex: d_{} has shape {}x{}, expected {}x{}", bottom_ + i + 1, d.rows(),
                                       d.cols(), ranks_[i], ranks_[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i)
        if (!(boundaries_[i] * boundaries_[i + 1]).is_zero())
            throw RoqError(fmt::format("IntComplex: d_{} d_{} != 0", bottom_ + i + 1, bottom_ + i + 2));
}

IntComplex IntComplex::from_cochain(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> coboundaries) {
    if (ranks.empty()) return IntComplex(0, {}, {});
    const int n = static_cast<int>(ranks.size());
    const int bottom = -(lo + n - 1);
    std::vector<std::size_t> chain_ranks(ranks.rbegin(), ranks.rend());
    std::vector<IntMatrix> chain_bd;
    for (int i = 0; i + 1 < n; ++i) {
        int m = bottom + i + 1;        // chain degree of the source
        int c = -m;                    // cochain degree of the source
        chain_bd.push_back(coboundaries.at(static_cast<std::size_t>(c - lo)));
    }
    return IntComplex(bottom, std::move(chain_ranks), std::move(chain_bd));
}

std::size_t IntComplex::rank_at(int k) const {
    if (ranks_.empty() || k < bottom_ || k > top()) return 0;
    return ranks_[static_cast<std::size_t>(k - bottom_)];
}

IntMatrix IntComplex::boundary(int k) const {
    if (k - 1 < bottom_ || k > top()) return IntMatrix(rank_at(k - 1), rank_at(k));
    return boundaries_[static_cast<std::size_t>(k - 1 - bottom_)];
}

Subquotient IntComplex::homology_subquotient(int k) const {
    const std::size_t n = rank_at(k);
    Lattice cycles = Lattice::kernel(boundary(k));
    Lattice bounds = rank_at(k + 1) ? Lattice::span(boundary(k + 1)) : Lattice::zero(n);
    return Subquotient(std::move(cycles), std::move(bounds));
}

FgAbelian homology_at(const IntComplex& c, int k) {
    if (c.rank_at(k) == 0) return FgAbelian::zero();
    return c.homology_subquotient(k).group();
}

}  // namespace roq
