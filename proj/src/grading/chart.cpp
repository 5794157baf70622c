#include "roq/grading/chart.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "roq/exact/hom.hpp"
#include "roq/util/errors.hpp"

namespace roq {

bool ChartEntry::consistent() const {
    if (gens.empty()) return true;
    if (gens.size() != group.num_generators()) return false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool free_slot = i < group.rank();
        Annotation a = gens[i].annotation;
        if (free_slot && a == Annotation::dot) return false;
        if (!free_slot && (a != Annotation::dot || group.generator_order(i) != 2)) return false;
    }
    return true;
}

namespace {

const std::map<std::string, Degree>& map_degrees() {
    static const std::map<std::string, Degree> m = {
        {"a", {0, -1}}, {"u", {2, -2}}, {"U", {4, -4}}, {"vbar", {1, 1}}, {"lambda", {1, -1}}};
    return m;
}

const FgAbelian& zero_group() {
    static const FgAbelian z;
    return z;
}

}  // namespace

Degree map_degree(const std::string& name) {
    auto it = map_degrees().find(name);
    if (it == map_degrees().end()) throw RoqError("unknown structure map '" + name + "'");
    return it->second;
}

bool is_map_name(const std::string& name) { return map_degrees().count(name) > 0; }

void Chart::set_entry(const Degree& d, ChartEntry e) {
    if (!window_.contains(d)) throw WindowError("set_entry: " + d.to_string() + " outside window " + window_.to_string());
    if (!e.consistent()) throw RoqError("set_entry: labels inconsistent with group at " + d.to_string());
    if (e.group.is_zero()) {
        entries_.erase(d);
        return;
    }
    entries_[d] = std::move(e);
}

void Chart::add_summand(const Degree& d, const FgAbelian& g, std::vector<LabeledGenerator> gens) {
    if (g.is_zero()) return;
    auto it = entries_.find(d);
    if (it == entries_.end()) {
        set_entry(d, {g, std::move(gens)});
        return;
    }
    ChartEntry e = it->second;
    bool labeled = e.labeled() && !gens.empty();
    e.group = e.group + g;
    if (!labeled) {
        e.gens.clear();
    } else {
        e.gens.insert(e.gens.end(), gens.begin(), gens.end());
        std::stable_partition(e.gens.begin(), e.gens.end(),
                              [](const LabeledGenerator& l) { return l.annotation != Annotation::dot; });
    }
    set_entry(d, std::move(e));
}

void Chart::erase_entry(const Degree& d) { entries_.erase(d); }

const ChartEntry* Chart::entry_at(const Degree& d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? nullptr : &it->second;
}

const FgAbelian& Chart::group_at(const Degree& d) const {
    if (!window_.contains(d)) throw WindowError("group_at: " + d.to_string() + " outside window " + window_.to_string());
    const ChartEntry* e = entry_at(d);
    return e ? e->group : zero_group();
}

void Chart::set_map(const std::string& name, const Degree& d, const IntMatrix& m) {
    Degree t = d + map_degree(name);
    const FgAbelian& src = group_at(d);
    const FgAbelian& dst = group_at(t);
    if (src.is_zero() || dst.is_zero()) throw RoqError(fmt::format("set_map {} at {}: zero group", name, d.to_string()));
    if (m.rows() != dst.num_generators() || m.cols() != src.num_generators())
        throw RoqError(fmt::format("set_map {} at {}: shape {}x{} does not match {} -> {}", name, d.to_string(), m.rows(),
                                   m.cols(), src.to_string(), dst.to_string()));
    IntMatrix r = reduce_to_target(m, dst);
    if (!is_homomorphism(r, src, dst))
        throw RoqError(fmt::format("set_map {} at {}: not a homomorphism", name, d.to_string()));
    maps_[{name, d}] = std::move(r);
}

IntMatrix Chart::mult_map(const std::string& name, const Degree& d) const {
    Degree t = d + map_degree(name);
    if (!window_.contains(d) || !window_.contains(t))
        throw WindowError(fmt::format("mult_map {} from {}: outside window {}", name, d.to_string(), window_.to_string()));
    const FgAbelian& src = group_at(d);
    const FgAbelian& dst = group_at(t);
    if (src.is_zero() || dst.is_zero()) return IntMatrix(dst.num_generators(), src.num_generators());
    auto it = maps_.find({name, d});
    if (it != maps_.end()) return it->second;
    if (complete_.count(name)) return IntMatrix(dst.num_generators(), src.num_generators());
    throw MissingMapError(fmt::format("mult_map {} from {}: not determined by this chart", name, d.to_string()));
}

Chart Chart::restricted(const Window& w) const {
    Chart c(theory_, pipeline_, window_.intersect(w));
    for (const auto& [d, e] : entries_)
        if (c.window_.contains(d)) c.entries_[d] = e;
    for (const auto& [key, m] : maps_) {
        Degree t = key.second + map_degree(key.first);
        if (c.window_.contains(key.second) && c.window_.contains(t)) c.maps_[key] = m;
    }
    c.complete_ = complete_;
    return c;
}

std::vector<CommutationFailure> Chart::check_commutation(const std::string& first, const std::string& second) const {
    std::vector<CommutationFailure> out;
    Degree f = map_degree(first);
    Degree s = map_degree(second);
    for (const auto& [d, e] : entries_) {
        if (!window_.contains(d + f) || !window_.contains(d + s) || !window_.contains(d + f + s)) continue;
        try {
            IntMatrix p1 = mult_map(second, d + f) * mult_map(first, d);
            IntMatrix p2 = mult_map(first, d + s) * mult_map(second, d);
            const FgAbelian& target = group_at(d + f + s);
            if (!(reduce_to_target(p1, target) == reduce_to_target(p2, target))) out.push_back({d, first, second});
        } catch (const MissingMapError&) {
        }
    }
    return out;
}

Chart Chart::bare() const {
    Chart c = *this;
    for (auto& [d, e] : c.entries_) e.gens.clear();
    return c;
}

}  // namespace roq
