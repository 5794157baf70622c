#pragma once

#include <string>
#include <vector>

#include "roq/grading/chart.hpp"

namespace roq {

struct GroupDifference {
    Degree degree;
    FgAbelian left;
    FgAbelian right;
};

struct LabelDifference {
    Degree degree;
    std::string left;
    std::string right;
};

struct ChartDiff {
    Window compared;
    // Set when the windows differ; only the intersection is compared.
    std::string warning;
    // Ordered by distance |x|+|y| from the origin, then by degree.
    std::vector<GroupDifference> groups;
    // Degrees with isomorphic groups whose labels or annotations differ.
    // Only compared where both sides are labeled.
    std::vector<LabelDifference> labels;

    bool empty() const { return groups.empty() && labels.empty(); }
    std::string to_string() const;
};

ChartDiff diff_charts(const Chart& a, const Chart& b);

}  // namespace roq
