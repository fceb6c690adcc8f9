#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polygraph/census.hpp"
#include "polygraph/lemmas.hpp"
#include "polygraph/stats.hpp"
#include "polygraph/verify.hpp"

namespace py = pybind11;
using namespace polygraph;

namespace {

LabelMode mode_from(const std::string& m) {
    if (m == "quadratic") return LabelMode::quadratic;
    if (m == "general") return LabelMode::general;
    throw PreconditionError("mode must be 'quadratic' or 'general'");
}

std::string mode_name(LabelMode m) {
    return m == LabelMode::quadratic ? "quadratic" : "general";
}

Poly make_poly(const Field& F, const std::vector<u64>& coeffs) {
    return Poly::from_coeffs(F, coeffs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "functional graphs of polynomial maps over prime fields";
    m.attr("__version__") = "0.1.0";

    py::register_exception<NotPrimeError>(m, "NotPrimeError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError", PyExc_ZeroDivisionError);

    py::class_<Field>(m, "Field")
        .def(py::init<u64>(), py::arg("p"))
        .def_property_readonly("p", &Field::modulus)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("pow", &Field::pow)
        .def("inv", &Field::inv)
        .def("roots_of_unity",
             [](const Field& F, u64 e) { return F.roots_of_unity(e); })
        .def("is_eth_power", &Field::is_eth_power, py::arg("x"), py::arg("e"))
        .def("power_coset_representatives", &Field::power_coset_representatives, py::arg("m"))
        .def("__repr__",
             [](const Field& F) { return "Field(" + std::to_string(F.modulus()) + ")"; });

    // polynomial helpers over plain coefficient lists (ascending degree)
    m.def("poly_eval",
          [](const Field& F, const std::vector<u64>& f, u64 x) {
              return poly_eval(F, make_poly(F, f), x);
          });
    m.def("poly_mul", [](const Field& F, const std::vector<u64>& a, const std::vector<u64>& b) {
        return poly_mul(F, make_poly(F, a), make_poly(F, b)).coeffs;
    });
    m.def("poly_gcd", [](const Field& F, const std::vector<u64>& a, const std::vector<u64>& b) {
        return poly_gcd(F, make_poly(F, a), make_poly(F, b)).coeffs;
    });
    m.def("iterate_poly",
          [](const Field& F, u64 d, u64 k) { return iterate_poly(F, d, k).coeffs; });
    m.def("twist_poly", [](const Field& F, u64 d, u64 k, u64 gamma) {
        return twist_poly(F, d, k, gamma).coeffs;
    });
    m.def("is_perfect_eth_power", [](const Field& F, const std::vector<u64>& f, u64 e) {
        return is_perfect_eth_power(F, make_poly(F, f), e);
    });

    py::class_<FunctionalGraph>(m, "FunctionalGraph")
        .def("__len__", &FunctionalGraph::size)
        .def("step", &FunctionalGraph::step)
        .def("out_table", &FunctionalGraph::out_table)
        .def("in_degree", &FunctionalGraph::in_degree);
    m.def("graph_from_poly", [](const Field& F, const std::vector<u64>& f) {
        return FunctionalGraph::from_poly(F, make_poly(F, f));
    });
    m.def("graph_from_table",
          [](std::vector<node> t) { return FunctionalGraph(std::move(t)); });

    py::class_<Component>(m, "Component")
        .def_readonly("cycle", &Component::cycle)
        .def_readonly("size", &Component::size);
    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("components", &Decomposition::components)
        .def_property_readonly("size_classes",
                               [](const Decomposition& d) {
                                   std::vector<std::pair<u64, u64>> out;
                                   for (const auto& sc : d.size_classes)
                                       out.emplace_back(sc.size, sc.count);
                                   return out;
                               })
        .def_property_readonly("k_star", &Decomposition::largest_component)
        .def_property_readonly("c_star", &Decomposition::max_size_multiplicity);
    m.def("decompose", &decompose);

    py::class_<StatRecord>(m, "StatRecord")
        .def_readonly("cyclic_points", &StatRecord::cyclic_points)
        .def_readonly("num_components", &StatRecord::num_components)
        .def_readonly("largest_component", &StatRecord::largest_component)
        .def_readonly("num_leaves", &StatRecord::num_leaves)
        .def_readonly("most_popular_size", &StatRecord::most_popular_size)
        .def_readonly("popular_size_multiplicity", &StatRecord::popular_size_multiplicity)
        .def_readonly("k_star", &StatRecord::k_star)
        .def_readonly("c_star", &StatRecord::c_star);
    m.def("graph_stats",
          [](const FunctionalGraph& g) { return graph_stats(g); });

    py::class_<GraphLabel>(m, "GraphLabel")
        .def_property_readonly("mode",
                               [](const GraphLabel& gl) { return mode_name(gl.used); })
        .def_property_readonly("fallback",
                               [](const GraphLabel& gl) { return gl.used != gl.requested; })
        .def_property_readonly("components",
                               [](const GraphLabel& gl) { return gl.ascii_components(); })
        .def_property_readonly("digest", &GraphLabel::packed_hex)
        .def_property_readonly("total_symbols", &GraphLabel::total_symbols);
    m.def(
        "label_graph",
        [](const FunctionalGraph& g, const std::string& mode) {
            return label_graph(g, mode_from(mode));
        },
        py::arg("graph"), py::arg("mode") = "general");
    m.def(
        "is_isomorphic",
        [](const FunctionalGraph& g, const FunctionalGraph& h, const std::string& mode) {
            return is_isomorphic(g, h, mode_from(mode));
        },
        py::arg("a"), py::arg("b"), py::arg("mode") = "general");

    py::class_<CensusResult>(m, "CensusResult")
        .def_readonly("d", &CensusResult::d)
        .def_readonly("q", &CensusResult::q)
        .def_property_readonly("N", [](const CensusResult& r) { return r.distinct; })
        .def_readonly("family_size", &CensusResult::family_size)
        .def_readonly("mode", &CensusResult::mode)
        .def_readonly("wall_seconds", &CensusResult::wall_seconds)
        .def_property_readonly("labels_hex",
                               [](const CensusResult& r) {
                                   std::vector<std::string> out;
                                   out.reserve(r.keys.size());
                                   for (const auto& k : r.keys) out.push_back(to_hex(k));
                                   return out;
                               })
        .def("summary_json", &CensusResult::summary_json);
    m.def("census_normalized", &census_normalized, py::arg("field"), py::arg("d"),
          py::arg("jobs") = 1, py::arg("keep_keys") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("census_bruteforce", &census_bruteforce, py::arg("field"), py::arg("d"),
          py::arg("jobs") = 1, py::arg("keep_keys") = false, py::arg("budget") = kCensusBudget,
          py::call_guard<py::gil_scoped_release>());

    m.def("upper_bound", &distinct_graph_upper_bound, py::arg("d"), py::arg("q"), py::arg("p"));
    m.def("rho", &lower_bound_exponent, py::arg("d"), py::arg("e"));
    m.def("eta_vector", &eta_vector, py::arg("field"), py::arg("d"), py::arg("a"), py::arg("J"),
          py::arg("j_start") = 1);
    m.def("eta_lower_bound", &eta_lower_bound, py::arg("field"), py::arg("d"), py::arg("J"),
          py::arg("j_start") = 1);

    py::class_<BoundsReport>(m, "BoundsReport")
        .def_readonly("d", &BoundsReport::d)
        .def_readonly("q", &BoundsReport::q)
        .def_readonly("s", &BoundsReport::s)
        .def_readonly("phi", &BoundsReport::phi)
        .def_readonly("upper", &BoundsReport::upper)
        .def_readonly("e", &BoundsReport::e)
        .def_readonly("rho", &BoundsReport::rho)
        .def_readonly("eta_lower", &BoundsReport::eta_lower)
        .def("to_json", &BoundsReport::to_json);
    m.def("bounds_report", &bounds_report, py::arg("field"), py::arg("d"),
          py::arg("eta_depth") = std::optional<u64>{});

    py::class_<MetricSummary>(m, "MetricSummary")
        .def_readonly("min", &MetricSummary::min)
        .def_readonly("max", &MetricSummary::max)
        .def_readonly("sum", &MetricSummary::sum)
        .def_readonly("mean", &MetricSummary::mean);
    py::class_<FamilyStats>(m, "FamilyStats")
        .def_readonly("p", &FamilyStats::p)
        .def_readonly("exclude_special", &FamilyStats::exclude_special)
        .def_readonly("family_count", &FamilyStats::family_count)
        .def_readonly("cyclic_points", &FamilyStats::cyclic_points)
        .def_readonly("num_components", &FamilyStats::num_components)
        .def_readonly("largest_component", &FamilyStats::largest_component)
        .def_readonly("most_popular_size", &FamilyStats::most_popular_size)
        .def_readonly("popular_multiplicity", &FamilyStats::popular_multiplicity)
        .def_readonly("num_leaves", &FamilyStats::num_leaves)
        .def_readonly("expected_cyclic", &FamilyStats::expected_cyclic)
        .def_readonly("expected_components", &FamilyStats::expected_components)
        .def_readonly("expected_largest", &FamilyStats::expected_largest)
        .def_readonly("expected_leaves", &FamilyStats::expected_leaves)
        .def_readonly("r", &FamilyStats::r)
        .def_readonly("s", &FamilyStats::s);
    m.def("family_stats", &family_stats, py::arg("p"), py::arg("exclude_special") = false,
          py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());

    py::class_<CyclicExtremes>(m, "CyclicExtremes")
        .def_readonly("p", &CyclicExtremes::p)
        .def_readonly("C", &CyclicExtremes::C)
        .def_readonly("C_star", &CyclicExtremes::C_star)
        .def_readonly("min_cyclic", &CyclicExtremes::min_cyclic)
        .def_readonly("r", &CyclicExtremes::r)
        .def_readonly("s", &CyclicExtremes::s)
        .def_readonly("c_f0", &CyclicExtremes::c_f0)
        .def_readonly("c_fm2", &CyclicExtremes::c_fm2)
        .def_readonly("identity_f0", &CyclicExtremes::identity_f0)
        .def_readonly("identity_fm2", &CyclicExtremes::identity_fm2);
    m.def("cyclic_extremes", &cyclic_extremes, py::arg("p"), py::arg("jobs") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("emit_table", [](const std::vector<FamilyStats>& rows, const std::string& fmt) {
        return emit_table(rows, parse_table_format(fmt));
    });

    py::class_<LemmaReport>(m, "LemmaReport")
        .def_readonly("name", &LemmaReport::name)
        .def_readonly("checks", &LemmaReport::checks)
        .def_property_readonly("ok", [](const LemmaReport& r) { return r.pass; })
        .def_readonly("counterexample", &LemmaReport::counterexample);
    m.def("check_iterate_congruence", &check_iterate_congruence);
    m.def("check_iterate_gcd", &check_iterate_gcd);
    m.def("check_products_not_square", &check_products_not_square);
    m.def("check_products_not_eth_power", &check_products_not_eth_power);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("suite", &VerificationReport::suite)
        .def_readonly("grid", &VerificationReport::grid)
        .def_readonly("checks", &VerificationReport::checks)
        .def_readonly("skipped_points", &VerificationReport::skipped_points)
        .def_readonly("failures", &VerificationReport::failures)
        .def_readonly("wall_seconds", &VerificationReport::wall_seconds)
        .def_property_readonly("ok", &VerificationReport::pass)
        .def("to_json", &VerificationReport::to_json, py::arg("with_timing") = false);
    m.def(
        "run_suite",
        [](const std::string& name, std::vector<u64> degrees, std::vector<u64> primes, u64 max_k,
           u64 max_h, u64 max_iterate, u64 max_index, u64 max_j, u64 samples, u64 seed,
           u64 eta_depth) {
            SuiteGrid grid;
            grid.degrees = std::move(degrees);
            grid.primes = std::move(primes);
            grid.max_k = max_k;
            grid.max_h = max_h;
            grid.max_iterate = max_iterate;
            grid.max_index = max_index;
            grid.max_j = max_j;
            grid.samples = samples;
            grid.seed = seed;
            grid.eta_depth = eta_depth;
            return run_suite(name, grid);
        },
        py::arg("name"), py::arg("degrees") = std::vector<u64>{2},
        py::arg("primes") = std::vector<u64>{5, 7, 13}, py::arg("max_k") = 4,
        py::arg("max_h") = 4, py::arg("max_iterate") = 6, py::arg("max_index") = 5,
        py::arg("max_j") = 3, py::arg("samples") = 50, py::arg("seed") = 1,
        py::arg("eta_depth") = 3, py::call_guard<py::gil_scoped_release>());
}
