#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cayley/cli.hpp"
#include "cayley/derived.hpp"
#include "cayley/g2.hpp"
#include "cayley/parser.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

py::object to_py_int(const Int& v) {
    // exact conversion through the decimal representation
    return py::module_::import("builtins").attr("int")(v.str());
}

py::dict graded_dict(const GradedRep& g) {
    py::dict out;
    for (const auto& [deg, reps] : g.terms) {
        py::list entries;
        for (const auto& [w, mult] : reps)
            entries.append(py::make_tuple(py::tuple(py::cast(w)), mult,
                                          to_py_int(gl_dimension(w, 7) * mult)));
        out[py::int_(deg)] = entries;
    }
    return out;
}

py::dict ext_dict(const ExtResult& e) {
    py::dict out;
    out["determined"] = e.determined;
    out["route"] = e.route;
    out["blockers"] = e.blockers;
    py::dict dims;
    for (const auto& [deg, d] : e.dims) dims[py::int_(deg)] = to_py_int(d);
    out["dims"] = dims;
    return out;
}

BundleSum plain_sum(const FormalComplex& x) {
    if (x.terms.size() != 1 || x.terms.begin()->first != 0)
        throw py::value_error("expected a plain bundle expression");
    return x.terms.at(0);
}

}  // namespace

PYBIND11_MODULE(_cayley, m) {
    m.doc() =
        "Exact equivariant sheaf cohomology on Gr(3,7) and the Cayley "
        "Grassmannian, with derived-category and G2 verification batteries";

    py::register_exception<ParseError>(m, "ExpressionError");

    py::class_<FormalComplex>(m, "Complex")
        .def("__repr__",
             [](const FormalComplex& x) { return print_complex(x); })
        .def("__eq__", [](const FormalComplex& a,
                          const FormalComplex& b) { return a == b; })
        .def("twist", [](const FormalComplex& x, int t) { return twist(x, t); })
        .def("shift", [](const FormalComplex& x, int s) { return shift(x, s); });

    m.def("parse", &parse_expression, py::arg("text"),
          py::arg("allow_shift") = true,
          "Parse a bundle expression into a formal complex");
    m.def("pretty", &print_complex, "Canonical form of a complex");

    m.def(
        "coh_gr",
        [](const std::string& expr) {
            return graded_dict(bulk_cohomology(
                plain_sum(parse_expression(expr, /*allow_shift=*/false))));
        },
        "Sheaf cohomology on Gr(3,7): degree -> [(weight, mult, dim)]");

    m.def(
        "coh_cg",
        [](const std::string& expr) {
            auto res = cg_cohomology(
                plain_sum(parse_expression(expr, /*allow_shift=*/false)));
            py::dict out;
            out["determined"] = res.determined;
            out["route"] = res.route;
            out["blockers"] = res.blockers;
            out["euler"] = to_py_int(res.euler());
            if (res.determined) out["cohomology"] = graded_dict(res.cohomology);
            return out;
        },
        "Sheaf cohomology on the Cayley Grassmannian");

    m.def(
        "ext",
        [](const std::string& lhs, const std::string& rhs) {
            return ext_dict(
                complex_ext(parse_expression(lhs), parse_expression(rhs)));
        },
        "Ext groups between two objects");

    m.def(
        "euler",
        [](const std::string& lhs, const std::string& rhs) {
            return to_py_int(
                complex_euler(parse_expression(lhs), parse_expression(rhs)));
        },
        "Euler pairing of two objects");

    m.def("collection_names", &cg15_names,
          "Names of the 15 objects of the builtin collection");

    m.def(
        "check_collection",
        [](const std::vector<std::string>& exprs) {
            std::vector<FormalComplex> objects;
            for (const auto& e : exprs) objects.push_back(parse_expression(e));
            auto table = check_exceptional_collection(objects, exprs);
            py::dict out;
            out["verdict"] =
                table.verdict == ExtTable::Verdict::Exceptional ? "EXCEPTIONAL"
                : table.verdict == ExtTable::Verdict::Failed    ? "FAILED"
                                                                : "UNRESOLVED";
            out["unresolved"] = table.unresolved;
            out["failures"] = table.failures;
            return out;
        },
        "Verify that a list of expressions forms an exceptional collection");

    m.def(
        "check_cg15",
        [] {
            auto table =
                check_exceptional_collection(cg15_collection(), cg15_names());
            return table.verdict == ExtTable::Verdict::Exceptional &&
                   table.unresolved.empty();
        },
        "Verify the builtin 15-object collection");

    m.def(
        "verify_all",
        [](std::uint64_t seed, int jobs) {
            py::list out;
            for (const auto& r : verify_battery(seed, jobs)) {
                py::dict item;
                item["name"] = r.name;
                item["pass"] = r.pass;
                item["blocked"] = r.blocked;
                item["detail"] = r.detail;
                out.append(item);
            }
            return out;
        },
        py::arg("seed") = 20240817, py::arg("jobs") = 1,
        "Run the full verification battery");

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Invoke the command-line interface; returns (exit_code, out, err)");

    m.def("jacobi_identity", &g2::jacobiator_identity_check,
          "Check the Jacobi identity of the induced bracket on all basis "
          "triples");
}
