#include "polygraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace polygraph {

namespace {

struct Accumulator {
    u64 min = std::numeric_limits<u64>::max();
    u64 max = 0;
    u64 sum = 0;

    void add(u64 v) {
        min = std::min(min, v);
        max = std::max(max, v);
        sum += v;
    }
    void merge(const Accumulator& o) {
        min = std::min(min, o.min);
        max = std::max(max, o.max);
        sum += o.sum;
    }
    MetricSummary finish(u64 count) const {
        MetricSummary m;
        m.min = count ? min : 0;
        m.max = max;
        m.sum = sum;
        m.mean = count ? static_cast<double>(sum) / static_cast<double>(count) : 0.0;
        return m;
    }
};

struct ScanAccums {
    Accumulator cyclic, comps, largest, popular, multiplicity, leaves;
    u64 count = 0;

    void merge(const ScanAccums& o) {
        cyclic.merge(o.cyclic);
        comps.merge(o.comps);
        largest.merge(o.largest);
        popular.merge(o.popular);
        multiplicity.merge(o.multiplicity);
        leaves.merge(o.leaves);
        count += o.count;
    }
};

std::vector<node> quadratic_table(u64 p, u64 a) {
    std::vector<node> out(p);
    for (u64 x = 0; x < p; ++x) out[x] = static_cast<node>((x * x + a) % p);
    return out;
}

unsigned resolve_jobs(unsigned jobs, u64 work) {
    if (jobs == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        jobs = hw ? hw : 1;
    }
    return static_cast<unsigned>(std::min<u64>(jobs, std::max<u64>(work, 1)));
}

void check_family_modulus(u64 p) {
    if (p == 2 || !is_prime(p)) throw PreconditionError("family scans need an odd prime");
    if (p > std::numeric_limits<node>::max()) throw BudgetError("prime too large for graph scans");
}

}  // namespace

FamilyStats family_stats(u64 p, bool exclude_special, unsigned jobs) {
    check_family_modulus(p);
    const u64 minus_two = p - 2;

    const unsigned workers = resolve_jobs(jobs, p);
    std::vector<ScanAccums> partial(workers);
    auto run = [&](unsigned w) {
        ScanAccums& acc = partial[w];
        const u64 lo = p * w / workers;
        const u64 hi = p * (w + 1) / workers;
        for (u64 a = lo; a < hi; ++a) {
            if (exclude_special && (a == 0 || a == minus_two)) continue;
            const FunctionalGraph g(quadratic_table(p, a));
            const StatRecord st = graph_stats(g);
            acc.cyclic.add(st.cyclic_points);
            acc.comps.add(st.num_components);
            acc.largest.add(st.largest_component);
            acc.popular.add(st.most_popular_size);
            acc.multiplicity.add(st.popular_size_multiplicity);
            acc.leaves.add(st.num_leaves);
            ++acc.count;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    ScanAccums total;
    for (const auto& part : partial) total.merge(part);

    FamilyStats fs;
    fs.p = p;
    fs.exclude_special = exclude_special;
    fs.family_count = total.count;
    fs.cyclic_points = total.cyclic.finish(total.count);
    fs.num_components = total.comps.finish(total.count);
    fs.largest_component = total.largest.finish(total.count);
    fs.most_popular_size = total.popular.finish(total.count);
    fs.popular_multiplicity = total.multiplicity.finish(total.count);
    fs.num_leaves = total.leaves.finish(total.count);

    const double pd = static_cast<double>(p);
    fs.expected_cyclic = std::sqrt(std::numbers::pi * pd / 2.0);
    fs.expected_components = 0.5 * std::log(pd);
    fs.expected_largest = 0.75788 * pd;
    fs.expected_leaves = pd / std::numbers::e;
    fs.r = largest_odd_divisor(p - 1);
    fs.s = largest_odd_divisor(p + 1);
    return fs;
}

CyclicExtremes cyclic_extremes(u64 p, unsigned jobs) {
    check_family_modulus(p);
    const u64 minus_two = p - 2;

    struct Part {
        u64 C = 0, C_star = 0;
        u64 min_cyclic = std::numeric_limits<u64>::max();
        u64 c_f0 = 0, c_fm2 = 0;
    };
    const unsigned workers = resolve_jobs(jobs, p);
    std::vector<Part> partial(workers);
    auto run = [&](unsigned w) {
        Part& part = partial[w];
        const u64 lo = p * w / workers;
        const u64 hi = p * (w + 1) / workers;
        for (u64 a = lo; a < hi; ++a) {
            const u64 c = count_cyclic_points(quadratic_table(p, a));
            part.C = std::max(part.C, c);
            part.min_cyclic = std::min(part.min_cyclic, c);
            if (a == 0) part.c_f0 = c;
            if (a == minus_two) part.c_fm2 = c;
            if (a != 0 && a != minus_two) part.C_star = std::max(part.C_star, c);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    CyclicExtremes ce;
    ce.p = p;
    ce.min_cyclic = std::numeric_limits<u64>::max();
    for (const auto& part : partial) {
        ce.C = std::max(ce.C, part.C);
        ce.C_star = std::max(ce.C_star, part.C_star);
        ce.min_cyclic = std::min(ce.min_cyclic, part.min_cyclic);
        ce.c_f0 += part.c_f0;
        ce.c_fm2 += part.c_fm2;
    }
    ce.r = largest_odd_divisor(p - 1);
    ce.s = largest_odd_divisor(p + 1);
    ce.identity_f0 = ce.c_f0 == ce.r + 1;
    ce.identity_fm2 = ce.c_fm2 == (ce.r + ce.s) / 2;
    return ce;
}

TableFormat parse_table_format(const std::string& name) {
    if (name == "text") return TableFormat::text;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw PreconditionError("unknown table format: " + name);
}

namespace {

struct MetricRow {
    const char* name;
    const MetricSummary FamilyStats::* summary;
    double FamilyStats::* expected;  // null when the metric has no baseline
    bool ratio;
};

constexpr MetricRow kMetricRows[] = {
    {"cyclic_points", &FamilyStats::cyclic_points, &FamilyStats::expected_cyclic, false},
    {"num_components", &FamilyStats::num_components, &FamilyStats::expected_components, true},
    {"largest_component", &FamilyStats::largest_component, &FamilyStats::expected_largest, true},
    {"most_popular_size", &FamilyStats::most_popular_size, nullptr, false},
    {"popular_multiplicity", &FamilyStats::popular_multiplicity, nullptr, false},
    {"num_leaves", &FamilyStats::num_leaves, &FamilyStats::expected_leaves, false},
};

}  // namespace

std::string emit_table(const std::vector<FamilyStats>& rows, TableFormat format) {
    std::ostringstream os;
    if (format == TableFormat::csv) {
        os << "prime,metric,min,max,mean,expected,ratio\n";
        for (const auto& fs : rows) {
            for (const auto& mr : kMetricRows) {
                const MetricSummary& m = fs.*(mr.summary);
                os << fs.p << ',' << mr.name << ',' << m.min << ',' << m.max << ','
                   << std::setprecision(10) << m.mean << ',';
                if (mr.expected) os << std::setprecision(10) << fs.*(mr.expected);
                os << ',';
                if (mr.expected && mr.ratio && fs.*(mr.expected) != 0)
                    os << std::setprecision(10) << m.mean / fs.*(mr.expected);
                os << '\n';
            }
        }
        return os.str();
    }
    if (format == TableFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& fs : rows) {
            for (const auto& mr : kMetricRows) {
                const MetricSummary& m = fs.*(mr.summary);
                nlohmann::json j{{"prime", fs.p},   {"metric", mr.name}, {"min", m.min},
                                 {"max", m.max},    {"mean", m.mean},
                                 {"excluded_special", fs.exclude_special}};
                if (mr.expected) j["expected"] = fs.*(mr.expected);
                if (mr.expected && mr.ratio && fs.*(mr.expected) != 0)
                    j["ratio"] = m.mean / fs.*(mr.expected);
                arr.push_back(std::move(j));
            }
        }
        return arr.dump(2) + "\n";
    }
    // aligned text, one block per metric, mirroring the table layout
    for (const auto& mr : kMetricRows) {
        os << "== " << mr.name << " ==\n";
        os << std::setw(10) << "Prime" << std::setw(10) << "Min" << std::setw(12) << "Max"
           << std::setw(16) << "Average";
        if (mr.expected) os << std::setw(16) << "Expected";
        if (mr.expected && mr.ratio) os << std::setw(14) << "Ratio";
        os << '\n';
        for (const auto& fs : rows) {
            const MetricSummary& m = fs.*(mr.summary);
            os << std::setw(10) << fs.p << std::setw(10) << m.min << std::setw(12) << m.max
               << std::setw(16) << std::setprecision(9) << m.mean;
            if (mr.expected) os << std::setw(16) << std::setprecision(9) << fs.*(mr.expected);
            if (mr.expected && mr.ratio && fs.*(mr.expected) != 0)
                os << std::setw(14) << std::setprecision(9) << m.mean / fs.*(mr.expected);
            os << '\n';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace polygraph
