#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bosonorder/errors.hpp"
#include "bosonorder/genfun.hpp"
#include "bosonorder/genstirling.hpp"
#include "bosonorder/pade.hpp"
#include "bosonorder/parser.hpp"
#include "bosonorder/sheffer.hpp"
#include "bosonorder/stirling.hpp"
#include "bosonorder/version.hpp"
#include "bosonorder/weyl.hpp"

namespace py = pybind11;
using namespace bosonorder;

namespace {

py::object rat_to_py(const Rat& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object value = fraction(to_string(r));
    if (denominator(r) == 1) return py::int_(value.attr("numerator"));
    return value;
}

Rat py_to_rat(py::handle h) {
    if (py::isinstance<py::int_>(h)) {
        return Rat(Int(py::str(h).cast<std::string>()));
    }
    if (py::isinstance<py::float_>(h)) {
        return rat_from_double(h.cast<double>());
    }
    if (py::isinstance<py::str>(h)) {
        const std::string s = h.cast<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
        return Rat(Int(py::str(h.attr("numerator")).cast<std::string>()),
                   Int(py::str(h.attr("denominator")).cast<std::string>()));
    }
    throw py::type_error("expected int, Fraction, float, or 'p/q' string");
}

std::map<unsigned, Rat> py_to_alpha(const py::dict& d) {
    std::map<unsigned, Rat> out;
    for (const auto& item : d) {
        out[item.first.cast<unsigned>()] = py_to_rat(item.second);
    }
    return out;
}

py::dict terms_to_py(const NormalForm& nf) {
    py::dict out;
    for (const auto& [key, coeff] : nf.terms()) {
        out[py::make_tuple(key.creators, key.annihilators)] = rat_to_py(coeff);
    }
    return out;
}

Polynomial py_to_poly(const py::sequence& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const auto& item : coeffs) c.push_back(py_to_rat(item));
    return Polynomial(std::move(c));
}

py::list poly_to_py(const Polynomial& p) {
    py::list out;
    for (const Rat& c : p.coefficients()) out.append(rat_to_py(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_bosonorder, m) {
    m.doc() = "Exact boson normal ordering and generalized Stirling/Bell combinatorics";
    m.attr("__version__") = kVersion;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<NormalForm>(m, "NormalForm")
        .def(py::init<>())
        .def_static(
            "monomial",
            [](unsigned creators, unsigned annihilators, py::object coeff) {
                return NormalForm::monomial(creators, annihilators, py_to_rat(coeff));
            },
            py::arg("creators"), py::arg("annihilators"), py::arg("coeff") = py::int_(1))
        .def_static("identity", &NormalForm::identity)
        .def("terms", &terms_to_py)
        .def("coefficient",
             [](const NormalForm& nf, unsigned r, unsigned s) {
                 return rat_to_py(nf.coefficient(r, s));
             })
        .def("is_zero", &NormalForm::is_zero)
        .def("__add__", [](const NormalForm& a, const NormalForm& b) { return a + b; })
        .def("__sub__", [](const NormalForm& a, const NormalForm& b) { return a - b; })
        .def("__mul__", &multiply)
        .def("__pow__", &power)
        .def("__eq__", [](const NormalForm& a, const NormalForm& b) { return a == b; })
        .def("__repr__", &NormalForm::to_string);

    py::class_<HomogeneousPoly>(m, "HomogeneousPoly")
        .def(py::init([](unsigned excess, const py::dict& coeffs) {
                 return HomogeneousPoly(excess, py_to_alpha(coeffs));
             }),
             py::arg("excess"), py::arg("coeffs"))
        .def_static(
            "from_expression",
            [](const std::string& expr) {
                return extract_homogeneous(to_normal_form(parse_expression(expr)));
            },
            py::arg("expr"))
        .def_property_readonly("excess", &HomogeneousPoly::excess)
        .def_property_readonly("coeffs",
                               [](const HomogeneousPoly& p) {
                                   py::dict out;
                                   for (const auto& [k, c] : p.coeffs()) {
                                       out[py::int_(k)] = rat_to_py(c);
                                   }
                                   return out;
                               })
        .def("normal_form", &HomogeneousPoly::normal_form)
        .def("__repr__", [](const HomogeneousPoly& p) {
            return "HomogeneousPoly(d=" + std::to_string(p.excess()) + ", " +
                   p.normal_form().to_string() + ")";
        });

    m.def(
        "normal_order",
        [](const std::string& expr) { return to_normal_form(parse_expression(expr)); },
        py::arg("expr"), "Parse an expression and return its exact normal form");

    m.def(
        "print_expression",
        [](const std::string& expr) { return to_string(parse_expression(expr)); },
        py::arg("expr"), "Canonical rendering of an expression");

    m.def(
        "stirling",
        [](unsigned n, unsigned k) { return rat_to_py(Rat(stirling2_recurrence(n, k))); },
        py::arg("n"), py::arg("k"));
    m.def(
        "bell_number", [](unsigned n) { return rat_to_py(Rat(bell_number(n))); }, py::arg("n"));
    m.def(
        "bell_polynomial",
        [](unsigned n, py::object x) { return rat_to_py(bell_polynomial(n, py_to_rat(x))); },
        py::arg("n"), py::arg("x"));
    m.def("dobinski", &dobinski_eval, py::arg("n"), py::arg("x"), py::arg("eps") = 1e-12,
          py::arg("max_terms") = kDefaultMaxTerms);

    m.def(
        "gen_stirling",
        [](const HomogeneousPoly& poly, unsigned n, long long k) {
            return rat_to_py(gen_stirling_recurrence(poly, n, k));
        },
        py::arg("poly"), py::arg("n"), py::arg("k"));
    m.def(
        "gen_stirling_row",
        [](const HomogeneousPoly& poly, unsigned n) {
            py::dict out;
            for (const auto& [k, v] : GenStirlingTable(poly, n).row(n)) {
                out[py::int_(k)] = rat_to_py(v);
            }
            return out;
        },
        py::arg("poly"), py::arg("n"));
    m.def(
        "gen_bell",
        [](const HomogeneousPoly& poly, unsigned n, py::object x) {
            return rat_to_py(gen_bell_polynomial(poly, n, py_to_rat(x)));
        },
        py::arg("poly"), py::arg("n"), py::arg("x") = py::int_(1));
    m.def("gen_dobinski", &gen_dobinski_eval, py::arg("poly"), py::arg("n"), py::arg("x"),
          py::arg("eps") = 1e-12, py::arg("max_terms") = kDefaultMaxTerms);

    m.def("egf_closed", &egf_bell_closed, py::arg("lam"), py::arg("x"));
    m.def(
        "egf_series",
        [](const HomogeneousPoly& poly, double lam, double x, unsigned trunc) {
            return egf_truncated({poly, lam, x, trunc});
        },
        py::arg("poly"), py::arg("lam"), py::arg("x"), py::arg("trunc") = 40);
    m.def("egf_dobinski", &egf_d0_dobinski, py::arg("poly"), py::arg("lam"), py::arg("x"),
          py::arg("eps") = 1e-12, py::arg("max_terms") = kDefaultMaxTerms);
    m.def("coherent_exp_element", &coherent_exp_element, py::arg("poly"), py::arg("lam"),
          py::arg("z"), py::arg("trunc") = 40);
    m.def("coherent_transfer_check", &coherent_transfer_check, py::arg("nf"), py::arg("z"),
          py::arg("zprime"), py::arg("dim") = 64, py::arg("rel_tol") = 1e-8);

    m.def(
        "flow_series",
        [](const py::sequence& q, unsigned order) {
            const BivariateSeries t = flow_series(py_to_poly(q), order);
            py::list out;
            for (unsigned i = 0; i <= order; ++i) out.append(poly_to_py(t.slice(i)));
            return out;
        },
        py::arg("q"), py::arg("order"));
    m.def(
        "prefactor_series",
        [](const py::sequence& q, const py::sequence& v, unsigned order) {
            const BivariateSeries g = prefactor_series(py_to_poly(q), py_to_poly(v), order);
            py::list out;
            for (unsigned i = 0; i <= order; ++i) out.append(poly_to_py(g.slice(i)));
            return out;
        },
        py::arg("q"), py::arg("v"), py::arg("order"));
    m.def(
        "verify_exp_normal_form",
        [](const py::sequence& q, const py::sequence& v, unsigned order) {
            return verify_exp_normal_form(py_to_poly(q), py_to_poly(v), order);
        },
        py::arg("q"), py::arg("v"), py::arg("order"));
    m.def(
        "coherent_egf_series",
        [](const py::sequence& q, const py::sequence& v, std::complex<double> z, unsigned order) {
            return coherent_egf_series(py_to_poly(q), py_to_poly(v), z, order);
        },
        py::arg("q"), py::arg("v"), py::arg("z"), py::arg("order"));

    m.def(
        "pade",
        [](const py::sequence& series, unsigned m_deg, unsigned n_deg) {
            std::vector<Rat> c;
            for (const auto& item : series) c.push_back(py_to_rat(item));
            const PadeApproximant p = pade_approximant(c, m_deg, n_deg);
            py::list num, den;
            for (const Rat& a : p.numerator) num.append(rat_to_py(a));
            for (const Rat& b : p.denominator) den.append(rat_to_py(b));
            return py::make_tuple(num, den);
        },
        py::arg("series"), py::arg("m"), py::arg("n"),
        "Returns (numerator, denominator) coefficient lists of the [m/n] approximant");
    m.def(
        "pade_eval",
        [](const py::sequence& series, unsigned m_deg, unsigned n_deg, double lam) {
            std::vector<Rat> c;
            for (const auto& item : series) c.push_back(py_to_rat(item));
            return pade_eval(pade_approximant(c, m_deg, n_deg), lam);
        },
        py::arg("series"), py::arg("m"), py::arg("n"), py::arg("lam"));
    m.def("pade_resum_egf", &pade_resum_egf, py::arg("poly"), py::arg("lam"), py::arg("x"),
          py::arg("m"), py::arg("n"));
}
