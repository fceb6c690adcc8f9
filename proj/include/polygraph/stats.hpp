#ifndef POLYGRAPH_STATS_HPP
#define POLYGRAPH_STATS_HPP

#include <string>
#include <vector>

#include "polygraph/graph.hpp"

namespace polygraph {

struct MetricSummary {
    u64 min = 0;
    u64 max = 0;
    u64 sum = 0;      // exact integer sum, so means reproduce bitwise
    double mean = 0;
};

// Aggregates over the family x^2 + a, a in F_p, with closed-form random-map
// baselines for comparison. `exclude_special` drops a in {0, -2}.
struct FamilyStats {
    u64 p = 0;
    bool exclude_special = false;
    u64 family_count = 0;

    MetricSummary cyclic_points;
    MetricSummary num_components;
    MetricSummary largest_component;
    MetricSummary most_popular_size;
    MetricSummary popular_multiplicity;
    MetricSummary num_leaves;

    double expected_cyclic = 0;      // sqrt(pi p / 2)
    double expected_components = 0;  // 0.5 ln p
    double expected_largest = 0;     // 0.75788 p
    double expected_leaves = 0;      // p / e

    u64 r = 0;  // largest odd divisor of p-1
    u64 s = 0;  // largest odd divisor of p+1
};

FamilyStats family_stats(u64 p, bool exclude_special, unsigned jobs = 1);

// Extremes of the cyclic-point count over the full x^2 + a family, plus the
// closed-form checks for a = 0 and a = -2.
struct CyclicExtremes {
    u64 p = 0;
    u64 C = 0;       // max over all a
    u64 C_star = 0;  // max over a not in {0, -2}
    u64 min_cyclic = 0;
    u64 r = 0, s = 0;
    u64 c_f0 = 0;   // cyclic points of x^2
    u64 c_fm2 = 0;  // cyclic points of x^2 - 2
    bool identity_f0 = false;   // c_f0 == r + 1
    bool identity_fm2 = false;  // c_fm2 == (r + s) / 2
};

CyclicExtremes cyclic_extremes(u64 p, unsigned jobs = 1);

enum class TableFormat { text, csv, json };
TableFormat parse_table_format(const std::string& name);

// Per-metric tables with Prime/Min/Max/Average/Expected(/Ratio) columns;
// csv rows are `prime,metric,min,max,mean,expected,ratio`.
std::string emit_table(const std::vector<FamilyStats>& rows, TableFormat format);

}  // namespace polygraph

#endif
