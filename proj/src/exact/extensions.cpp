#include "roq/exact/extensions.hpp"

#include <algorithm>
#include <set>

#include "roq/exact/lattice.hpp"
#include "roq/util/errors.hpp"

namespace roq {

namespace {

constexpr std::size_t kMaxCocycles = 1u << 16;

}  // namespace

std::vector<FgAbelian> possible_extensions(const FgAbelian& sub, const FgAbelian& quot) {
    const std::size_t ns = sub.num_generators();
    const std::size_t nq = quot.num_generators();
    const std::size_t n = ns + nq;

    // one cocycle coordinate per (torsion generator of quot, generator of sub)
    struct Slot {
        std::size_t qgen;
        std::size_t sgen;
        Integer range;
    };
    std::vector<Slot> slots;
    for (std::size_t j = quot.rank(); j < nq; ++j) {
        Integer q = quot.generator_order(j);
        for (std::size_t i = 0; i < ns; ++i) {
            Integer d = sub.generator_order(i);
            Integer r = d == 0 ? q : gcd(d, q);
            if (r > 1) slots.push_back({j, i, r});
        }
    }
    Integer total = 1;
    for (const auto& s : slots) {
        total *= s.range;
        if (total > kMaxCocycles) throw UnsupportedError("possible_extensions: too many cocycles to enumerate");
    }

    std::set<std::string> seen;
    std::vector<FgAbelian> out;
    std::vector<Integer> counter(slots.size(), Integer(0));
    for (;;) {
        std::vector<std::vector<Integer>> rel;
        for (std::size_t i = sub.rank(); i < ns; ++i) {
            std::vector<Integer> v(n);
            v[i] = sub.generator_order(i);
            rel.push_back(std::move(v));
        }
        for (std::size_t j = quot.rank(); j < nq; ++j) {
            std::vector<Integer> v(n);
            v[ns + j] = quot.generator_order(j);
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (slots[k].qgen == j) v[slots[k].sgen] = -counter[k];
            rel.push_back(std::move(v));
        }
        FgAbelian e = Subquotient(Lattice::full(n), Lattice::span(n, rel)).group();
        if (seen.insert(e.to_string()).second) out.push_back(e);

        std::size_t k = 0;
        while (k < slots.size()) {
            counter[k] += 1;
            if (counter[k] < slots[k].range) break;
            counter[k] = 0;
            ++k;
        }
        if (k == slots.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const FgAbelian& a, const FgAbelian& b) { return a.to_string() < b.to_string(); });
    return out;
}

std::vector<FgAbelian> filtered_candidates(const std::vector<FgAbelian>& pieces) {
    std::vector<FgAbelian> cand{FgAbelian::zero()};
    for (const auto& piece : pieces) {
        std::set<std::string> seen;
        std::vector<FgAbelian> next;
        for (const auto& c : cand)
            for (const auto& e : possible_extensions(c, piece))
                if (seen.insert(e.to_string()).second) next.push_back(e);
        cand = std::move(next);
    }
    std::sort(cand.begin(), cand.end(),
              [](const FgAbelian& a, const FgAbelian& b) { return a.to_string() < b.to_string(); });
    return cand;
}

bool admits_filtration(const FgAbelian& g, const std::vector<FgAbelian>& pieces) {
    for (const auto& c : filtered_candidates(pieces))
        if (c == g) return true;
    return false;
}

}  // namespace roq
