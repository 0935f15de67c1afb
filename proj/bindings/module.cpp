#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "liescan/cartan.hpp"
#include "liescan/diophantine.hpp"
#include "liescan/errors.hpp"
#include "liescan/homotopy.hpp"
#include "liescan/poincare.hpp"
#include "liescan/screener.hpp"
#include "liescan/serialize.hpp"

namespace py = pybind11;

namespace {

using namespace liescan;

py::int_ to_py_int(const mpz_class& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact dimension, Betti-number and stable-homotopy screening of SU/SO/Sp groups";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "LiescanError");
    py::register_exception<ParseError>(m, "GroupParseError", base);
    py::register_exception<NotSimpleError>(m, "NotSimpleError", base);
    py::register_exception<UnsupportedFamilyError>(m, "UnsupportedFamilyError", base);
    py::register_exception<OutsideStableRangeError>(m, "OutsideStableRangeError", base);

    py::enum_<CartanClass>(m, "CartanClass")
        .value("A", CartanClass::A)
        .value("B", CartanClass::B)
        .value("C", CartanClass::C)
        .value("D", CartanClass::D);

    py::class_<CartanGroup>(m, "CartanGroup")
        .def(py::init<CartanClass, long long>(), py::arg("cartan_class"), py::arg("rank"))
        .def_property_readonly("cartan_class", &CartanGroup::cartan_class)
        .def_property_readonly("rank", &CartanGroup::rank)
        .def_property_readonly("dimension", &CartanGroup::dimension)
        .def_property_readonly("name", &CartanGroup::name)
        .def_property_readonly("cartan_label", &CartanGroup::cartan_label)
        .def("exponents", &CartanGroup::exponents)
        .def(py::self == py::self)
        .def("__repr__", [](const CartanGroup& g) {
            return "<CartanGroup " + g.name() + " [" + g.cartan_label() + "]>";
        });

    py::class_<FGAbelianGroup>(m, "FGAbelianGroup")
        .def_readonly("free_rank", &FGAbelianGroup::free_rank)
        .def_readonly("torsion", &FGAbelianGroup::torsion)
        .def("is_trivial", &FGAbelianGroup::is_trivial)
        .def("render", &FGAbelianGroup::render)
        .def(py::self == py::self)
        .def("__repr__", [](const FGAbelianGroup& g) {
            return "<FGAbelianGroup " + g.render() + ">";
        });

    m.def("parse_group", &parse_group, py::arg("name"),
          "parse a group name such as SU(64), SO(91), Sp(3) or A63");
    m.def("special_unitary", &special_unitary, py::arg("m"));
    m.def("special_orthogonal", &special_orthogonal, py::arg("m"));
    m.def("symplectic", &symplectic, py::arg("rank"));

    m.def(
        "poincare_polynomial",
        [](const CartanGroup& g) {
            const IntPolynomial p = poincare_polynomial(g);
            py::list coeffs;
            for (const mpz_class& c : p.coefficients()) coeffs.append(to_py_int(c));
            return coeffs;
        },
        py::arg("group"), "coefficient list of the Poincare polynomial, ascending degree");
    m.def(
        "betti", [](const CartanGroup& g, long long q) { return to_py_int(betti(g, q)); },
        py::arg("group"), py::arg("q"));

    m.def("stable_range_bound", &stable_range_bound, py::arg("group"));
    m.def("pi", &pi, py::arg("group"), py::arg("k"),
          "stable homotopy group pi_k, valid for 2 <= k <= stable_range_bound(group)");

    m.def(
        "solve_rn_bruteforce",
        [](long long max_b) {
            py::list rows;
            for (const RNSolution& s : solve_rn_bruteforce(max_b)) {
                rows.append(py::make_tuple(s.b, to_py_int(s.k)));
            }
            return rows;
        },
        py::arg("max_b"), "all (b, k) with 2^b = k^2 + 7, k >= 0 and 1 <= b <= max_b");
    m.def(
        "qubit_rotation_matches",
        [](long long max_n) {
            py::list rows;
            for (const QubitMatch& q : qubit_rotation_matches(max_n)) {
                py::dict row;
                row["n"] = q.n;
                row["N"] = to_py_int(q.N);
                row["k"] = to_py_int(q.k);
                rows.append(std::move(row));
            }
            return rows;
        },
        py::arg("max_n"), "all n <= max_n with dim SU(2^n) == dim SO(N) for some N >= 3");
    m.def(
        "pell_enumerate",
        [](int seed_sign, long long count) {
            py::list rows;
            for (const PellSolution& s : pell_enumerate(seed_sign, count)) {
                rows.append(py::make_tuple(to_py_int(s.d), to_py_int(s.k)));
            }
            return rows;
        },
        py::arg("seed_sign"), py::arg("count"),
        "first `count` solutions (d, |k|) of 8d^2 = k^2 + 7 on the orbit of (1, seed_sign)");

    m.def(
        "screen",
        [](const CartanGroup& a, const CartanGroup& b) {
            return json_to_py(nlohmann::json(screen(a, b)));
        },
        py::arg("group_a"), py::arg("group_b"),
        "dimension, Poincare-polynomial and stable-homotopy comparison as a dict");
    m.def(
        "scan_qubit_rotations",
        [](long long max_n) {
            py::list rows;
            for (const auto& [match, report] : scan_qubit_rotations(max_n)) {
                py::dict row;
                row["match"] = json_to_py(nlohmann::json(match));
                row["report"] = json_to_py(nlohmann::json(report));
                rows.append(std::move(row));
            }
            return rows;
        },
        py::arg("max_n"), "screening reports for every SU(2^n) vs SO(N) dimension match");
    m.def("scan_class_pairs", &scan_class_pairs, py::arg("class_x"), py::arg("class_y"),
          py::arg("max_rank"),
          "rank pairs with equal Poincare polynomials across two distinct classes");
}
