#include "suitable/builders.hpp"
#include "suitable/cli.hpp"
#include "suitable/formats.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace suitable;

namespace {

py::object to_python(const Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& obj)
{
    return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

PermutationArray make_array(const std::vector<Row>& rows, std::optional<std::size_t> v)
{
    if (v)
        return PermutationArray(*v, rows);
    return PermutationArray::from_rows(rows);
}

py::dict verdict_dict(const Verdict& verdict)
{
    return to_python(verdict_to_json(verdict)).cast<py::dict>();
}

}  // namespace

PYBIND11_MODULE(_suitable, m)
{
    m.doc() = "Suitable cores of permutation arrays: verification and constructions.";

    // Translators run newest first, so the base class goes in first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<BuildError>(m, "BuildError", PyExc_RuntimeError);

    m.def(
        "c_pre",
        [](const std::vector<Row>& rows, Symbol sigma, const std::vector<Symbol>& t_set, std::optional<std::size_t> v) {
            return c_pre(make_array(rows, v), sigma, t_set);
        },
        py::arg("rows"), py::arg("sigma"), py::arg("t_set"), py::arg("v") = py::none());

    m.def(
        "is_suitable_array",
        [](const std::vector<Row>& rows, int t) {
            const ArraySuitability res = is_suitable_array(PermutationArray::from_rows(rows), t);
            py::dict out;
            out["suitable"] = res.suitable;
            if (res.violation)
                out["violation"] = py::dict(py::arg("sigma") = res.violation->sigma,
                                            py::arg("subset") = res.violation->subset);
            else
                out["violation"] = py::none();
            return out;
        },
        py::arg("rows"), py::arg("t"));

    m.def(
        "array_to_core",
        [](const std::vector<Row>& rows, int t) {
            const CoreExtraction ex = array_to_core(PermutationArray::from_rows(rows), t);
            return py::dict(py::arg("rows") = ex.core.rows(), py::arg("v") = ex.core.n_symbols(),
                            py::arg("t") = ex.t, py::arg("leaders") = ex.leaders, py::arg("renaming") = ex.renaming);
        },
        py::arg("rows"), py::arg("t"));

    m.def(
        "core_to_array",
        [](const std::vector<Row>& rows, std::optional<std::size_t> v) {
            return core_to_array(make_array(rows, v)).rows();
        },
        py::arg("rows"), py::arg("v") = py::none());

    m.def(
        "verify",
        [](const std::vector<Row>& rows, int t, const std::string& mode, std::optional<std::size_t> v,
           std::uint64_t trials, std::uint64_t seed) {
            const PermutationArray core = make_array(rows, v);
            const VerifyOptions options = default_verify_options();
            Verdict verdict;
            {
                py::gil_scoped_release release;
                if (mode == "auto")
                    verdict = certify_core(core, t, options);
                else if (mode == "exact")
                    verdict = verify_exact(core, t, options);
                else if (mode == "condition_ii")
                    verdict = verify_condition_ii(core, t, options);
                else if (mode == "shallow")
                    verdict = verify_shallow(core, t, options);
                else if (mode == "necessary")
                    verdict = verify_necessary(core, t);
                else if (mode == "sample")
                    verdict = sample_falsify(core, t, trials, seed);
                else
                    throw InvalidArgument("unknown mode '" + mode + "'");
            }
            return verdict_dict(verdict);
        },
        py::arg("rows"), py::arg("t"), py::arg("mode") = "auto", py::arg("v") = py::none(),
        py::arg("trials") = 10000, py::arg("seed") = 0);

    m.def("johnson_d_l43", &johnson_d_l43, py::arg("l"));

    m.def(
        "build_packing",
        [](int l, int k, std::size_t target, std::uint64_t seed, int restarts) {
            PackingOptions options;
            options.restarts = restarts;
            BlockPacking p;
            {
                py::gil_scoped_release release;
                p = build_packing(l, k, target, seed, options);
            }
            return to_python(packing_to_json(p));
        },
        py::arg("l"), py::arg("k"), py::arg("target"), py::arg("seed") = 0, py::arg("restarts") = 64);

    m.def(
        "validate_packing",
        [](const py::object& packing) { return validate_packing(packing_from_json(from_python(packing))).valid; },
        py::arg("packing"));

    m.def(
        "validate_ramsey_coloring",
        [](const py::object& coloring, const std::vector<int>& target) {
            const RamseyCheck check = validate_ramsey_coloring(coloring_from_json(from_python(coloring)),
                                                               RamseyTarget{target});
            return py::dict(py::arg("valid") = check.valid, py::arg("color") = check.color,
                            py::arg("clique") = check.clique);
        },
        py::arg("coloring"), py::arg("target"));

    m.def(
        "search_coloring",
        [](int n, const std::vector<int>& target, int m_colors, std::uint64_t seed, std::uint64_t budget) -> py::object {
            std::optional<EdgeMultiColoring> col;
            {
                py::gil_scoped_release release;
                col = search_coloring(n, RamseyTarget{target}, m_colors, seed, budget);
            }
            if (! col)
                return py::none();
            return to_python(coloring_to_json(*col));
        },
        py::arg("n"), py::arg("target"), py::arg("m") = 1, py::arg("seed") = 0, py::arg("budget") = 400000);

    m.def(
        "exhaustive_nonexistence",
        [](int n, const std::vector<int>& target, int m_colors) {
            py::gil_scoped_release release;
            return exhaustive_nonexistence(n, RamseyTarget{target}, m_colors);
        },
        py::arg("n"), py::arg("target"), py::arg("m") = 1);

    m.def(
        "bounds",
        [](const std::string& formula, int k, int l, int m_colors, int r, const std::vector<int>& k_vec,
           std::optional<std::int64_t> value) {
            BoundQuery q{formula, k, l, m_colors, r, k_vec, value};
            const BoundReport rep = bounds_report(q);
            py::dict out;
            out["quantity"] = rep.quantity;
            out["direction"] = rep.direction;
            out["formula"] = rep.provenance;
            out["valid"] = rep.valid;
            out["value"] = rep.value ? py::cast(*rep.value) : py::none();
            out["raw"] = rep.raw ? py::cast(*rep.raw) : py::none();
            out["side_values"] = rep.side_values;
            out["note"] = rep.note;
            return out;
        },
        py::arg("formula"), py::arg("k") = 0, py::arg("l") = 0, py::arg("m") = 1, py::arg("r") = 0,
        py::arg("k_vec") = std::vector<int>{}, py::arg("value") = py::none());

    m.def(
        "construct",
        [](const std::string& route, int s, int delta, int alpha, int l, const std::vector<int>& k_vec,
           std::uint64_t seed) {
            BuildSpec spec;
            spec.route = route_from_string(route);
            spec.s = s;
            spec.delta = delta;
            spec.alpha = alpha;
            spec.l = l;
            spec.k_vec = k_vec;
            spec.seed = seed;
            if (const std::string reason = infeasibility(spec); ! reason.empty())
                throw InvalidArgument("infeasible: " + reason);
            BuildOptions options;
            options.verify = default_verify_options();
            CoreWitness w;
            {
                py::gil_scoped_release release;
                w = build_core(spec, options);
            }
            return to_python(witness_to_json(w));
        },
        py::arg("route"), py::arg("s"), py::arg("delta") = 1, py::arg("alpha") = 3, py::arg("l") = 0,
        py::arg("k_vec") = std::vector<int>{}, py::arg("seed") = 0);

    m.def(
        "plan",
        [](int t, int v) {
            const Plan p = plan_parameters(t, v);
            py::dict out;
            out["s"] = p.s;
            out["delta"] = p.delta;
            out["alpha"] = p.alpha;
            out["packing_l"] = p.packing.feasible_l;
            out["ramsey_min_l"] = p.ramsey.applicable ? py::cast(p.ramsey.min_l) : py::none();
            out["small_l_advisory"] = p.small_l_advisory;
            return out;
        },
        py::arg("t"), py::arg("v"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
