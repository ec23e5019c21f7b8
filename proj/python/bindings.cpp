#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bszego/error.hpp"
#include "bszego/pick.hpp"
#include "bszego/quadrature.hpp"
#include "bszego/trig.hpp"
#include "bszego/verify.hpp"
#include "bszego/weights.hpp"

namespace py = pybind11;
using namespace bsz;

namespace {

PickFunction make_pick(double beta, Complex gamma, const std::vector<std::pair<double, Complex>>& poles) {
    std::vector<PickTerm> terms;
    for (const auto& [c, z] : poles) terms.push_back({c, z});
    return PickFunction::make(beta, gamma, std::move(terms));
}

MeasureForm parse_form(const std::string& s) {
    if (s == "measure2") return MeasureForm::Measure2;
    if (s == "measure5") return MeasureForm::Measure5;
    throw Error(ErrorKind::InvalidSpec, "form must be 'measure2' or 'measure5'");
}

}  // namespace

PYBIND11_MODULE(_bszego, m) {
    m.doc() = "Closed-form quadrature for Bernstein-Szego weights and its numerical verification";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::enum_<Family>(m, "Family")
        .value("CosPlusCosh", Family::CosPlusCosh)
        .value("SquaredCosPlusCosh", Family::SquaredCosPlusCosh)
        .value("CoshMinusCosOverT", Family::CoshMinusCosOverT)
        .value("ProductCosPlusCosh", Family::ProductCosPlusCosh)
        .value("ProductCoshMinusCos", Family::ProductCoshMinusCos)
        .value("MixedPlusMinus", Family::MixedPlusMinus);

    py::class_<QuadratureRule>(m, "QuadratureRule")
        .def_readonly("nodes", &QuadratureRule::nodes)
        .def_readonly("weights", &QuadratureRule::weights)
        .def_readonly("exact_degree", &QuadratureRule::exact_degree)
        .def_property_readonly("p_zero_at_origin", [](const QuadratureRule& r) {
            return r.constraint == RuleConstraint::RequiresPZeroAtOrigin;
        })
        .def("__call__", [](const QuadratureRule& r, std::vector<double> coeffs) {
            return apply_rule(r, RealPolynomial(std::move(coeffs)));
        }, py::arg("coeffs"), "apply the rule to sum_i coeffs[i] t^i")
        .def("__len__", [](const QuadratureRule& r) { return r.nodes.size(); });

    m.def("rule_cos_plus_cosh", &rule_cos_plus_cosh, py::arg("n"), py::arg("m"), py::arg("a"));
    m.def("rule_squared", &rule_squared, py::arg("n"), py::arg("m"), py::arg("a"));
    m.def("rule_cosh_minus_cos", &rule_cosh_minus_cos, py::arg("n"), py::arg("m"), py::arg("a"));

    m.def("rho", [](int n, int mm, double a, Family f, double t) {
        return rho_eval(WeightSpec::make(n, mm, a, f), t);
    }, py::arg("n"), py::arg("m"), py::arg("a"), py::arg("family"), py::arg("t"));
    m.def("szego_factor", [](int n, int mm, double a, Family f) {
        auto fac = build_szego_factor(WeightSpec::make(n, mm, a, f));
        return py::make_tuple(fac.h.coeffs(), fac.max_factorization_residual);
    }, py::arg("n"), py::arg("m"), py::arg("a"), py::arg("family"),
       "(coefficients of h, max residual of |h|^2 against rho)");

    m.def("sum_form", &sum_form, py::arg("n"), py::arg("m"), py::arg("a"), py::arg("u"));
    m.def("sum_form_beta", &sum_form_beta, py::arg("n"), py::arg("m"), py::arg("a"), py::arg("u"));
    m.def("corollary", [](const std::string& which, int n, int mm, double a) {
        Corollary c = which == "A" ? Corollary::A : which == "B" ? Corollary::B : Corollary::C;
        if (which != "A" && which != "B" && which != "C")
            throw Error(ErrorKind::InvalidSpec, "corollary must be A, B or C");
        auto v = corollary_eval(c, n, mm, a);
        return py::make_tuple(v.closed_form, v.oracle_value);
    }, py::arg("which"), py::arg("n"), py::arg("m") = 0, py::arg("a") = 1.0,
       "(closed form, oracle value)");

    m.def("s_sum", &s_sum, py::arg("n"), py::arg("m"));
    m.def("theta_integral", [](int n, int mm) {
        auto c = theta_integral(n, mm);
        return py::make_tuple(c.lhs, c.rhs);
    }, py::arg("n"), py::arg("m"));
    m.def("pf_reciprocal_U", [](int k, Complex z) {
        auto c = pf_reciprocal_U(k, z);
        return py::make_tuple(c.lhs, c.rhs);
    }, py::arg("k"), py::arg("z"));
    m.def("ramanujan_353", [](int n, int k) {
        auto c = ramanujan_353_finite(n, k);
        return py::make_tuple(c.lhs, c.rhs);
    }, py::arg("n"), py::arg("k"));

    m.def("pick_eval", [](double beta, Complex gamma, const std::vector<std::pair<double, Complex>>& poles,
                          double x) { return pick_eval(make_pick(beta, gamma, poles), x); },
          py::arg("beta"), py::arg("gamma"), py::arg("poles"), py::arg("x"));
    m.def("moment_match", [](int n, int mm, double beta, Complex gamma,
                             const std::vector<std::pair<double, Complex>>& poles, const std::string& form,
                             int j) {
        auto meas = example_measure(n, mm, make_pick(beta, gamma, poles), parse_form(form));
        auto p = moment_match_check(meas, j);
        return py::make_tuple(p.lhs, p.rhs, p.rel_error());
    }, py::arg("n"), py::arg("m"), py::arg("beta"), py::arg("gamma"), py::arg("poles"), py::arg("form"),
       py::arg("j"), "(real-line moment, matched moment, relative error)");

    py::class_<VerificationRecord>(m, "VerificationRecord")
        .def_readonly("theorem_id", &VerificationRecord::theorem_id)
        .def_property_readonly("params", [](const VerificationRecord& r) {
            py::dict d;
            for (const auto& p : r.params)
                d[py::str(p.key)] = p.numeric ? py::object(py::float_(p.num)) : py::object(py::str(p.text));
            return d;
        })
        .def_readonly("closed_form", &VerificationRecord::closed_form)
        .def_readonly("oracle_value", &VerificationRecord::oracle_value)
        .def_readonly("abs_error", &VerificationRecord::abs_error)
        .def_readonly("tol", &VerificationRecord::tol)
        .def_readonly("passed", &VerificationRecord::passed)
        .def_readonly("note", &VerificationRecord::note)
        .def("__repr__", [](const VerificationRecord& r) {
            return "<VerificationRecord " + r.theorem_id + (r.passed ? " passed>" : " failed>");
        });

    m.def("suites", []() {
        std::vector<py::tuple> out;
        for (const auto& s : suite_list()) out.push_back(py::make_tuple(s.id, s.criterion, s.summary));
        return out;
    }, "(id, criterion, summary) for every registered suite");
    m.def("run_verify", [](std::vector<std::string> suites, std::map<std::string, Grid> grids,
                           std::optional<double> tol, int jobs) {
        RunConfig cfg;
        cfg.suites = std::move(suites);
        cfg.grids = std::move(grids);
        cfg.tol = tol;
        cfg.jobs = jobs;
        cfg.seed = seed_from_env(cfg.seed);
        py::gil_scoped_release release;
        return run_verify(cfg);
    }, py::arg("suites"), py::arg("grids") = std::map<std::string, Grid>{}, py::arg("tol") = py::none(),
       py::arg("jobs") = 1);
    m.def("report", [](const std::vector<VerificationRecord>& rs, const std::string& format) {
        return report(rs, parse_report_format(format));
    }, py::arg("records"), py::arg("format") = "text");
    m.def("dump_rule", [](int n, int mm, double a, const std::string& family, const std::string& format) {
        return dump_rule(n, mm, a, parse_family(family), parse_rule_format(format));
    }, py::arg("n"), py::arg("m"), py::arg("a"), py::arg("family") = "CosPlusCosh", py::arg("format") = "json");
}
