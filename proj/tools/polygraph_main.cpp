// polygraph: functional graphs of polynomial maps over prime fields.
// Subcommands: label, iso, enumerate, bounds, stats, verify.
//
// Exit codes: 0 success (and "isomorphic" for iso), 1 non-isomorphic,
// 2 usage error, 3 precondition or budget error, 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polygraph/census.hpp"
#include "polygraph/stats.hpp"
#include "polygraph/verify.hpp"

namespace {

using namespace polygraph;

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerifyFailed = 4;

std::vector<u64> parse_u64_list(const std::string& csv) {
    std::vector<u64> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
    return out;
}

Poly parse_poly(const Field& F, const std::string& csv) {
    return Poly::from_coeffs(F, parse_u64_list(csv));
}

LabelMode parse_mode(const std::string& m) {
    return m == "quadratic" ? LabelMode::quadratic : LabelMode::general;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw Error("cannot open output file: " + path);
    return file;
}

struct LabelArgs {
    u64 prime = 0;
    std::string poly, map_file, mode = "general", format = "text", out;
};

int cmd_label(const LabelArgs& a) {
    std::optional<FunctionalGraph> g;
    if (!a.map_file.empty()) {
        g = read_map_table_file(a.map_file);
    } else {
        const Field F(a.prime);
        g = FunctionalGraph::from_poly(F, parse_poly(F, a.poly));
    }
    LabelMode mode = parse_mode(a.mode);
    bool char2_reroute = false;
    if (mode == LabelMode::quadratic && a.prime != 0 && a.prime % 2 == 0) {
        mode = LabelMode::general;  // characteristic 2 has no quadratic shape
        char2_reroute = true;
    }
    const GraphLabel gl = label_graph(*g, mode);

    std::ofstream file;
    std::ostream& os = open_out(file, a.out);
    if (a.format == "json") {
        nlohmann::json j{{"mode", gl.used == LabelMode::quadratic ? "quadratic" : "general"},
                         {"fallback", gl.used != gl.requested || char2_reroute},
                         {"components", gl.ascii_components()},
                         {"digest", gl.packed_hex()}};
        os << j.dump(2) << '\n';
    } else {
        os << "mode: " << (gl.used == LabelMode::quadratic ? "quadratic" : "general");
        if (gl.used != gl.requested) os << " (fell back from quadratic)";
        if (char2_reroute) os << " (characteristic 2: general mode used)";
        os << '\n';
        for (const auto& c : gl.ascii_components()) os << "component: " << c << '\n';
        os << "digest: " << gl.packed_hex() << '\n';
    }
    return 0;
}

struct IsoArgs {
    u64 prime = 0;
    std::string poly_a, poly_b, map_a, map_b, mode = "general";
};

int cmd_iso(const IsoArgs& a) {
    std::optional<FunctionalGraph> g, h;
    if (!a.map_a.empty()) {
        g = read_map_table_file(a.map_a);
        h = read_map_table_file(a.map_b);
    } else {
        const Field F(a.prime);
        g = FunctionalGraph::from_poly(F, parse_poly(F, a.poly_a));
        h = FunctionalGraph::from_poly(F, parse_poly(F, a.poly_b));
    }
    const bool iso = is_isomorphic(*g, *h, parse_mode(a.mode));
    std::cout << (iso ? "isomorphic" : "non-isomorphic") << '\n';
    return iso ? 0 : 1;
}

struct EnumArgs {
    u64 degree = 2;
    u64 prime = 0;
    bool brute = false;
    bool emit_labels = false;
    unsigned jobs = 1;
    std::string out;
};

int cmd_enumerate(const EnumArgs& a) {
    const Field F(a.prime);
    const CensusResult r = a.brute
                               ? census_bruteforce(F, a.degree, a.jobs, a.emit_labels)
                               : census_normalized(F, a.degree, a.jobs, a.emit_labels);
    std::ofstream file;
    std::ostream& os = open_out(file, a.out);
    if (a.emit_labels)
        for (const auto& key : r.keys) os << to_hex(key) << '\n';
    os << r.summary_json() << '\n';
    return 0;
}

struct BoundsArgs {
    u64 degree = 2;
    u64 prime = 0;
    std::optional<u64> eta_depth;
};

int cmd_bounds(const BoundsArgs& a) {
    const Field F(a.prime);
    std::cout << bounds_report(F, a.degree, a.eta_depth).to_json() << '\n';
    return 0;
}

struct StatsArgs {
    std::string prime_list;
    u64 degree = 2;
    bool exclude_special = false;
    std::string format = "text", out;
    unsigned jobs = 1;
};

int cmd_stats(const StatsArgs& a) {
    if (a.degree != 2) throw PreconditionError("family statistics cover degree 2 only");
    const TableFormat fmt = parse_table_format(a.format);
    std::vector<FamilyStats> rows;
    for (u64 p : parse_u64_list(a.prime_list))
        rows.push_back(family_stats(p, a.exclude_special, a.jobs));
    std::ofstream file;
    std::ostream& os = open_out(file, a.out);
    os << emit_table(rows, fmt);
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::string degrees = "2", primes = "5,7,13";
    SuiteGrid grid;
    std::string out;
};

int cmd_verify(VerifyArgs& a) {
    a.grid.degrees = parse_u64_list(a.degrees);
    a.grid.primes = parse_u64_list(a.primes);
    const VerificationReport rep = run_suite(a.suite, a.grid);
    std::ofstream file;
    std::ostream& os = open_out(file, a.out);
    os << rep.to_json(true) << '\n';
    return rep.pass() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"functional graphs of polynomial maps over prime fields"};
    app.require_subcommand(1);

    LabelArgs label_args;
    auto* label = app.add_subcommand("label", "canonical label of one graph");
    label->add_option("--prime", label_args.prime, "field modulus p (prime)");
    auto* lp = label->add_option("--poly", label_args.poly,
                                 "coefficients a0,a1,...,ad (ascending degree)")
                   ->needs(label->get_option("--prime"));
    auto* lm = label->add_option("--map-file", label_args.map_file,
                                 "map table file: first line n, second line out[0..n-1]");
    lp->excludes(lm);
    label->add_option("--mode", label_args.mode, "labelling mode")
        ->check(CLI::IsMember({"quadratic", "general"}))
        ->capture_default_str();
    label->add_option("--format", label_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    label->add_option("--out", label_args.out, "write to file instead of stdout");

    IsoArgs iso_args;
    auto* iso = app.add_subcommand("iso", "isomorphism test for two graphs");
    iso->add_option("--prime", iso_args.prime, "field modulus p (prime)");
    auto* ia = iso->add_option("--poly-a", iso_args.poly_a, "first polynomial");
    auto* ib = iso->add_option("--poly-b", iso_args.poly_b, "second polynomial");
    auto* ma = iso->add_option("--map-file-a", iso_args.map_a, "first map table");
    auto* mb = iso->add_option("--map-file-b", iso_args.map_b, "second map table");
    ia->needs(ib);
    ma->needs(mb);
    ia->excludes(ma);
    iso->add_option("--mode", iso_args.mode, "labelling mode")
        ->check(CLI::IsMember({"quadratic", "general"}))
        ->capture_default_str();

    EnumArgs enum_args;
    auto* en = app.add_subcommand("enumerate", "census of non-isomorphic graphs");
    en->add_option("--degree", enum_args.degree, "polynomial degree d")->required();
    en->add_option("--prime", enum_args.prime, "field modulus p (prime)")->required();
    en->add_flag("--brute-force", enum_args.brute, "scan every degree-d polynomial");
    en->add_flag("--emit-labels", enum_args.emit_labels,
                 "print one hex-packed label per distinct graph");
    en->add_option("--jobs", enum_args.jobs, "worker threads (0 = hardware)");
    en->add_option("--out", enum_args.out, "write to file instead of stdout");

    BoundsArgs bounds_args;
    u64 eta_depth_flag = 0;
    auto* bo = app.add_subcommand("bounds", "count bounds for N_d(q)");
    bo->add_option("--degree", bounds_args.degree, "polynomial degree d")->required();
    bo->add_option("--prime", bounds_args.prime, "field modulus p (prime)")->required();
    auto* ed = bo->add_option("--eta-depth", eta_depth_flag,
                              "also compute the eta-vector lower bound to this depth");

    StatsArgs stats_args;
    auto* st = app.add_subcommand("stats", "family statistics for x^2 + a");
    st->add_option("--prime-list", stats_args.prime_list, "comma-separated primes")->required();
    st->add_option("--degree", stats_args.degree, "must be 2")->capture_default_str();
    st->add_flag("--exclude-special", stats_args.exclude_special, "drop a in {0, -2}");
    st->add_option("--format", stats_args.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    st->add_option("--jobs", stats_args.jobs, "worker threads (0 = hardware)");
    st->add_option("--out", stats_args.out, "write to file instead of stdout");

    VerifyArgs verify_args;
    auto* ve = app.add_subcommand("verify", "instance-check suites");
    ve->add_option("--suite", verify_args.suite, "suite name")
        ->check(CLI::IsMember({"congruence", "gcd", "notsquare", "notethpower", "bounds-sandwich"}))
        ->required();
    ve->add_option("--degrees", verify_args.degrees, "comma-separated degrees")
        ->capture_default_str();
    ve->add_option("--primes", verify_args.primes, "comma-separated primes")
        ->capture_default_str();
    ve->add_option("--max-k", verify_args.grid.max_k, "congruence: largest k");
    ve->add_option("--max-h", verify_args.grid.max_h, "congruence: largest h");
    ve->add_option("--max-iterate", verify_args.grid.max_iterate, "gcd: largest index");
    ve->add_option("--max-index", verify_args.grid.max_index, "notsquare: subset universe size");
    ve->add_option("--max-j", verify_args.grid.max_j, "notethpower: largest level");
    ve->add_option("--samples", verify_args.grid.samples, "notethpower: random collections");
    ve->add_option("--seed", verify_args.grid.seed, "random seed");
    ve->add_option("--eta-depth", verify_args.grid.eta_depth, "bounds-sandwich: eta depth");
    ve->add_option("--out", verify_args.out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (label->parsed()) {
            if (label_args.poly.empty() == label_args.map_file.empty())
                throw PreconditionError("need exactly one of --poly and --map-file");
            return cmd_label(label_args);
        }
        if (iso->parsed()) {
            if (iso_args.poly_a.empty() == iso_args.map_a.empty())
                throw PreconditionError("need exactly one of --poly-a/--poly-b and map files");
            if (!iso_args.poly_a.empty() && iso_args.prime == 0)
                throw PreconditionError("--poly-a/--poly-b need --prime");
            return cmd_iso(iso_args);
        }
        if (en->parsed()) return cmd_enumerate(enum_args);
        if (bo->parsed()) {
            if (*ed) bounds_args.eta_depth = eta_depth_flag;
            return cmd_bounds(bounds_args);
        }
        if (st->parsed()) return cmd_stats(stats_args);
        if (ve->parsed()) return cmd_verify(verify_args);
    } catch (const NotPrimeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const DivisionByZeroError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
