#include "roq/exact/fg_abelian.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "roq/exact/int_matrix.hpp"
#include "roq/exact/smith.hpp"
#include "roq/util/errors.hpp"

namespace roq {

FgAbelian::FgAbelian(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw RoqError("FgAbelian: torsion coefficient below 2");
        if (i && torsion_[i] % torsion_[i - 1] != 0)
            throw RoqError("FgAbelian: torsion coefficients do not form a divisibility chain");
    }
}

FgAbelian FgAbelian::cyclic(const Integer& order) { return from_cyclic({order}); }

FgAbelian FgAbelian::from_cyclic(const std::vector<Integer>& orders) {
    std::size_t rank = 0;
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        Integer a = o < 0 ? Integer(-o) : o;
        if (a == 0)
            ++rank;
        else if (a > 1)
            finite.push_back(a);
    }
    if (finite.empty()) return FgAbelian(rank, {});
    // invariant factors of a diagonal matrix
    IntMatrix d(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) d(i, i) = finite[i];
    SmithForm s = smith_normal_form(d);
    std::vector<Integer> torsion;
    for (const auto& v : s.invariants())
        if (v > 1) torsion.push_back(v);
    return FgAbelian(rank, std::move(torsion));
}

Integer FgAbelian::generator_order(std::size_t i) const {
    if (i < rank_) return 0;
    return torsion_.at(i - rank_);
}

FgAbelian FgAbelian::operator+(const FgAbelian& o) const {
    std::vector<Integer> orders(rank_ + o.rank_, Integer(0));
    orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    orders.insert(orders.end(), o.torsion_.begin(), o.torsion_.end());
    return from_cyclic(orders);
}

std::string FgAbelian::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (rank_ == 1)
        s = "Z";
    else if (rank_ > 1)
        s = fmt::format("Z^{}", rank_);
    for (const auto& d : torsion_) {
        if (!s.empty()) s += '+';
        s += "Z/" + d.str();
    }
    return s;
}

FgAbelian FgAbelian::parse(const std::string& text) {
    if (text == "0") return {};
    std::vector<Integer> orders;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('+', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok == "Z") {
            orders.emplace_back(0);
        } else if (tok.rfind("Z^", 0) == 0) {
            std::size_t n = 0;
            try {
                n = std::stoul(tok.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad group token '" + tok + "'");
            }
            orders.insert(orders.end(), n, Integer(0));
        } else if (tok.rfind("Z/", 0) == 0 && tok.size() > 2 &&
                   std::all_of(tok.begin() + 2, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            orders.emplace_back(tok.substr(2));
        } else {
            throw ParseError("bad group token '" + tok + "' in '" + text + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return from_cyclic(orders);
}

bool iso_check(const FgAbelian& g1, const FgAbelian& g2) { return g1 == g2; }

std::map<Integer, std::size_t> factorize(Integer n) {
    std::map<Integer, std::size_t> out;
    if (n < 0) n = -n;
    for (Integer p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1) ++out[n];
    return out;
}

CompositionFactors composition_factors(const FgAbelian& g) {
    CompositionFactors c;
    c.rank = g.rank();
    for (const auto& d : g.torsion())
        for (const auto& [p, e] : factorize(d)) {
            Integer q = 1;
            for (std::size_t i = 0; i < e; ++i) q *= p;
            ++c.prime_powers[q];
        }
    return c;
}

JordanHolder jordan_holder(const FgAbelian& g) {
    JordanHolder j;
    j.rank = g.rank();
    for (const auto& d : g.torsion())
        for (const auto& [p, e] : factorize(d)) j.primes[p] += e;
    return j;
}

JordanHolder jordan_holder(const std::vector<FgAbelian>& pieces) {
    JordanHolder j;
    for (const auto& g : pieces) {
        JordanHolder k = jordan_holder(g);
        j.rank += k.rank;
        for (const auto& [p, e] : k.primes) j.primes[p] += e;
    }
    return j;
}

}  // namespace roq
