#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "roq/exact/fg_abelian.hpp"
#include "roq/exact/int_matrix.hpp"
#include "roq/grading/degree.hpp"
#include "roq/grading/generator.hpp"

namespace roq {

struct ChartEntry {
    FgAbelian group;
    // Empty for bare entries. Otherwise one label per standard generator:
    // squares and circles for the free part, then dots.
    std::vector<LabeledGenerator> gens;

    bool labeled() const { return !gens.empty(); }
    // Labels agree with the group (free part first, dots only on Z/2).
    bool consistent() const;
    bool operator==(const ChartEntry&) const = default;

    static ChartEntry bare(FgAbelian g) { return {std::move(g), {}}; }
};

// Structure maps are named by the class multiplied by.
Degree map_degree(const std::string& name);
bool is_map_name(const std::string& name);

struct CommutationFailure {
    Degree degree;
    std::string first;
    std::string second;
};

class Chart {
public:
    Chart() = default;
    Chart(std::string theory, std::string pipeline, Window window)
        : theory_(std::move(theory)), pipeline_(std::move(pipeline)), window_(window) {}

    const std::string& theory() const { return theory_; }
    const std::string& pipeline() const { return pipeline_; }
    const Window& window() const { return window_; }
    void set_theory(std::string t) { theory_ = std::move(t); }
    void set_pipeline(std::string p) { pipeline_ = std::move(p); }

    const std::map<Degree, ChartEntry>& entries() const { return entries_; }
    const std::map<std::pair<std::string, Degree>, IntMatrix>& maps() const { return maps_; }
    const std::set<std::string>& complete_maps() const { return complete_; }

    // Zero groups are not stored. Throws WindowError outside the window.
    void set_entry(const Degree& d, ChartEntry e);
    // Adds a direct summand (labels are concatenated and re-sorted).
    void add_summand(const Degree& d, const FgAbelian& g, std::vector<LabeledGenerator> gens = {});
    void erase_entry(const Degree& d);

    // Throws WindowError outside the window; zero group for absent entries.
    const FgAbelian& group_at(const Degree& d) const;
    const ChartEntry* entry_at(const Degree& d) const;
    bool nonzero(const Degree& d) const { return entry_at(d) != nullptr; }

    // Records the matrix of multiplication by `name` from d. Rows are the
    // target generators; entries are reduced modulo the target orders.
    void set_map(const std::string& name, const Degree& d, const IntMatrix& m);
    // Declares that every unrecorded map of this name is zero.
    void mark_complete(const std::string& name) { complete_.insert(name); }
    bool has_map(const std::string& name, const Degree& d) const { return maps_.count({name, d}) > 0; }

    // Matrix of multiplication by `name` from d to d + deg(name). Zero
    // matrix when either side vanishes. WindowError if either degree lies
    // outside the window; MissingMapError if the chart does not record it.
    IntMatrix mult_map(const std::string& name, const Degree& d) const;

    Chart restricted(const Window& w) const;
    // Checks name1∘name2 == name2∘name1 wherever all four degrees lie in
    // the window and all maps are known.
    std::vector<CommutationFailure> check_commutation(const std::string& first, const std::string& second) const;

    // Drops generator labels (groups and maps stay).
    Chart bare() const;

    bool operator==(const Chart&) const = default;

private:
    std::string theory_;
    std::string pipeline_;
    Window window_;
    std::map<Degree, ChartEntry> entries_;
    std::map<std::pair<std::string, Degree>, IntMatrix> maps_;
    std::set<std::string> complete_;
};

}  // namespace roq
