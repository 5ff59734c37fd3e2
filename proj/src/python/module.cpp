// Python bindings for the counting formulas, oracles and checks. Big integers
// cross the boundary as Python ints via their decimal representation; forms
// and fields cross as JSON strings in the documented schema.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pfaff/bott.hpp"
#include "pfaff/bounds.hpp"
#include "pfaff/counting.hpp"
#include "pfaff/flags.hpp"
#include "pfaff/serialize.hpp"

namespace py = pybind11;
using namespace pfaff;
using namespace pfaff::bott;

namespace {

py::object to_py(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::object rat_to_py(const Rat& q) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(to_py(numerator_of(q)), to_py(denominator_of(q)));
}

std::vector<Rat> rats(const std::vector<long long>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

PolyForm parse_form(const std::string& s) { return form_from_json(nlohmann::json::parse(s)); }

PolyVectorField parse_field(const std::string& s) {
    return field_from_json(nlohmann::json::parse(s));
}

} // namespace

PYBIND11_MODULE(_pfaffcount, mod) {
    mod.doc() = "Exact counts, oracles and degree bounds for projective Pfaff systems";

    py::register_exception<counting::PreconditionViolated>(mod, "PreconditionViolated",
                                                           PyExc_ValueError);
    py::register_exception<flags::SingularPoint>(mod, "SingularPoint", PyExc_RuntimeError);

    mod.def(
        "h_omega", [](int n, int q, int p, int k) { return to_py(h_omega(n, q, p, k)); },
        py::arg("n"), py::arg("q"), py::arg("p"), py::arg("k"),
        "dim H^q(P^n, Omega^p(k)), exact");
    mod.def(
        "h_tangent", [](int n, int s, int r, int t) { return to_py(h_tangent(n, s, r, t)); },
        py::arg("n"), py::arg("s"), py::arg("r"), py::arg("t"),
        "dim H^s(P^n, Lambda^r T(t)), exact");

    mod.def(
        "pfaff_count",
        [](int n, int d, int m, int r) { return to_py(counting::pfaff_count({n, d, m, r})); },
        py::arg("n"), py::arg("d"), py::arg("m"), py::arg("r"),
        "closed-formula count of degree-m invariant twisted r-forms");
    mod.def(
        "pfaff_count_piecewise",
        [](int n, int d, int m, int r) {
            return to_py(counting::pfaff_count_piecewise({n, d, m, r}));
        },
        py::arg("n"), py::arg("d"), py::arg("m"), py::arg("r"));
    mod.def(
        "vf_count", [](int n, int m, int d) { return to_py(counting::vf_count({n, m, d})); },
        py::arg("n"), py::arg("m"), py::arg("d"),
        "closed-formula count of degree-d tangent fields");

    mod.def(
        "example_field",
        [](int n, int d, const std::vector<long long>& a) {
            return field_to_json(counting::example_field(n, d, rats(a))).dump();
        },
        py::arg("n"), py::arg("d"), py::arg("coefficients"),
        "coupled monomial field on odd-dimensional P^n, as JSON");
    mod.def(
        "example_flag",
        [](int d, const std::vector<long long>& a) {
            auto [X, w] = flags::example_5_1(d, rats(a));
            return py::make_tuple(field_to_json(X).dump(), form_to_json(w).dump());
        },
        py::arg("d"), py::arg("coefficients"),
        "coupled field/1-form flag pair on P^3, as JSON strings");

    mod.def(
        "oracle_pfaff_count",
        [](const std::string& field_json, int m, int r) {
            return to_py(counting::oracle_pfaff_count(parse_field(field_json), m, r));
        },
        py::arg("field_json"), py::arg("m"), py::arg("r"),
        "kernel-computed invariant-form count");
    mod.def(
        "oracle_vf_count",
        [](const std::string& form_json, int m, int d) {
            return to_py(counting::oracle_vf_count(parse_form(form_json), m, d));
        },
        py::arg("form_json"), py::arg("m"), py::arg("d"),
        "kernel-computed tangent-field count");
    mod.def(
        "oracle_matrix_cols",
        [](int n, int r, int m) { return to_py(counting::oracle_matrix_cols(n, r, m)); },
        py::arg("n"), py::arg("r"), py::arg("m"));

    mod.def(
        "twisted_form_dim",
        [](int n, int r, int m) { return static_cast<int>(twisted_form_basis(n, r, m).size()); },
        py::arg("n"), py::arg("r"), py::arg("m"),
        "dimension of the space of degree-m twisted r-forms, by exact kernel");

    mod.def(
        "check_flag",
        [](const std::string& field_json, const std::string& form_json) {
            return flags::check_vf_form_flag(parse_field(field_json), parse_form(form_json));
        },
        py::arg("field_json"), py::arg("form_json"), "exact symbolic flag test i_X w = 0");
    mod.def(
        "check_integrable",
        [](const std::string& form_json) {
            return flags::check_integrability_codim1(parse_form(form_json));
        },
        py::arg("form_json"), "Frobenius condition w ^ dw = 0");
    mod.def(
        "check_decomposable",
        [](const std::string& form_json) {
            return flags::check_decomposable_2form(parse_form(form_json));
        },
        py::arg("form_json"), "decomposability w ^ w = 0");
    mod.def(
        "degree_of_form",
        [](const std::string& form_json) { return flags::degree_of_pfaff(parse_form(form_json)); },
        py::arg("form_json"));

    mod.def(
        "slope",
        [](int dim, long long deg) { return rat_to_py(bounds::slope(dim, Int(deg))); },
        py::arg("dim"), py::arg("deg"), "Mumford-Takemoto slope (dim - deg)/dim");
    mod.def(
        "bound_report",
        [](const std::string& theorem, const std::string& case_name, const py::dict& params) {
            using namespace bounds;
            auto geti = [&](const char* k, int dflt = 0) {
                return params.contains(k) ? params[k].cast<int>() : dflt;
            };
            auto getv = [&](const char* k) {
                return params.contains(k) ? params[k].cast<std::vector<int>>()
                                          : std::vector<int>{};
            };
            BoundReport rep;
            if (theorem == "cor1.2") {
                rep = corollary_1_2_check(geti("deg_F"), geti("deg_G"));
            } else if (theorem == "cor1.4") {
                rep = corollary_1_4_check(geti("deg_D"), geti("dim_D", 1), geti("deg_G"));
            } else if (theorem == "thm6.1") {
                LogarithmicData d;
                d.n = geti("n"), d.p = geti("p"), d.degrees = getv("degrees");
                d.selected_index = geti("index"), d.index_set = getv("index_set");
                d.regularity = geti("regularity"), d.deg_F = geti("deg_F");
                LogCase c;
                if (case_name == "smooth-hypersurface") c = LogCase::SmoothHypersurface;
                else if (case_name == "normal-crossing") c = LogCase::NormalCrossing;
                else if (case_name == "curve-smooth") c = LogCase::CurveSmooth;
                else if (case_name == "curve-nodal") c = LogCase::CurveNodal;
                else if (case_name == "ci-regularity") c = LogCase::CI_Regularity;
                else if (case_name == "ci-nonsing-codim1") c = LogCase::CI_NonsingCodim1;
                else throw std::invalid_argument("unknown thm6.1 case: " + case_name);
                rep = logarithmic_bounds(d, c);
            } else if (theorem == "thm6.3") {
                PullbackData d;
                d.n = geti("n"), d.m = geti("m"), d.k = geti("k"), d.r = geti("r");
                d.d = geti("d"), d.degrees = getv("degrees");
                d.regularity = geti("regularity"), d.deg_F = geti("deg_F");
                PullbackCase c;
                if (case_name == "invariant-smooth") c = PullbackCase::InvariantSmooth;
                else if (case_name == "invariant-nc") c = PullbackCase::InvariantNC;
                else if (case_name == "singcomp-regularity") c = PullbackCase::SingCompIntRegularity;
                else if (case_name == "singcomp-nonsing-codim1")
                    c = PullbackCase::SingCompIntNonsingCodim1;
                else throw std::invalid_argument("unknown thm6.3 case: " + case_name);
                rep = pullback_bounds(d, c);
            } else if (theorem == "thm6.5") {
                DecompVariant v;
                if (case_name == "general") v = DecompVariant::General;
                else if (case_name == "complete-intersection")
                    v = DecompVariant::CompleteIntersection;
                else if (case_name == "equal-degrees") v = DecompVariant::EqualDegrees;
                else throw std::invalid_argument("unknown thm6.5 variant: " + case_name);
                rep = decomposable_bound(geti("deg_D"), getv("degrees"), v);
            } else {
                throw std::invalid_argument("unknown theorem id: " + theorem);
            }
            py::dict out;
            out["case"] = rep.theorem_case;
            out["lhs"] = rat_to_py(rep.lhs);
            out["rhs"] = rat_to_py(rep.rhs);
            out["holds"] = rep.holds;
            out["note"] = rep.note;
            return out;
        },
        py::arg("theorem"), py::arg("case_name") = "", py::arg("params") = py::dict(),
        "evaluate one degree inequality; lhs/rhs returned as Fractions");
}
