// Batch front end: every computation as a scriptable subcommand with
// structured output. Exit 0 = success, 1 = computation-level failure
// (mismatch, refuted check), 2 = usage error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pfaff/bott.hpp"
#include "pfaff/bounds.hpp"
#include "pfaff/counting.hpp"
#include "pfaff/flags.hpp"
#include "pfaff/serialize.hpp"

using namespace pfaff;
using namespace pfaff::bott;
using json = nlohmann::json;

namespace {

constexpr const char* kSchema = "pfaffcount/1";

/// Numbers that may exceed 64 bits go out as decimal strings.
json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

json rat_json(const Rat& q) {
    if (denominator_of(q) == 1) return int_json(numerator_of(q));
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

struct Output {
    std::string format = "json"; // json | csv | human

    void emit(json j) const {
        j["schema"] = kSchema;
        if (format == "json") {
            std::cout << j.dump() << "\n";
            return;
        }
        std::vector<std::pair<std::string, std::string>> cells;
        for (auto& [k, v] : j.items())
            cells.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
        if (format == "csv") {
            for (size_t i = 0; i < cells.size(); ++i)
                std::cout << cells[i].first << (i + 1 < cells.size() ? "," : "\n");
            for (size_t i = 0; i < cells.size(); ++i)
                std::cout << cells[i].second << (i + 1 < cells.size() ? "," : "\n");
        } else {
            for (auto& [k, v] : cells) std::cout << k << ": " << v << "\n";
        }
    }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

std::vector<Rat> to_rats(const std::vector<int>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (int x : v) out.emplace_back(x);
    return out;
}

PolyVectorField seeded_linear_field(int n, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    auto monos = monomials_of_degree(n + 1, degree);
    PolyVectorField X(n);
    bool nonzero = false;
    for (int i = 0; i <= n; ++i) {
        Polynomial p(n + 1);
        for (const auto& m : monos) {
            int c = coef(rng);
            if (c != 0) {
                p.add_term(m, Rat(c));
                nonzero = true;
            }
        }
        X.component(i) = p;
    }
    if (!nonzero) return seeded_linear_field(n, degree, seed + 1);
    return X;
}

PolyForm seeded_projective_form(int n, int r, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-4, 4);
    auto basis = twisted_form_basis(n, r, m);
    PolyForm w(n, r);
    bool nonzero = false;
    for (const auto& b : basis) {
        int c = coef(rng);
        if (c != 0) {
            w += b * Rat(c);
            nonzero = true;
        }
    }
    if (!nonzero && !basis.empty()) return seeded_projective_form(n, r, m, seed + 1);
    return w;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact counts, oracles and degree bounds for projective Pfaff systems"};
    app.require_subcommand(1);

    Output out;
    std::uint64_t seed = 0;
    app.add_option("--format", out.format, "json, csv or human")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for any randomized input")->capture_default_str();

    int rc = 0;

    // bott ------------------------------------------------------------------
    auto* bott = app.add_subcommand("bott", "cohomology dimension of a twisted sheaf on P^n");
    std::string sheaf = "omega";
    int bn = 3, bq = 0, bp = 1, bk = 0, bs = 0, br = 1, bt = 0;
    bott->add_option("--sheaf", sheaf, "omega (forms) or tangent (polyvector fields)")
        ->check(CLI::IsMember({"omega", "tangent"}))
        ->capture_default_str();
    bott->add_option("--n", bn, "projective dimension")->required();
    bott->add_option("--q", bq, "cohomological degree (omega)");
    bott->add_option("--p", bp, "form degree (omega)");
    bott->add_option("--k", bk, "twist (omega)");
    bott->add_option("--s", bs, "cohomological degree (tangent)");
    bott->add_option("--r", br, "exterior power (tangent)");
    bott->add_option("--t", bt, "twist (tangent)");
    bott->callback([&] {
        Int v = sheaf == "omega" ? h_omega(bn, bq, bp, bk) : h_tangent(bn, bs, br, bt);
        out.emit({{"sheaf", sheaf}, {"value", int_json(v)}});
    });

    // count-forms -----------------------------------------------------------
    auto* cf = app.add_subcommand("count-forms", "closed-formula count of invariant twisted forms");
    counting::PfaffCountQuery fq{3, 1, 0, 1};
    bool piecewise = false;
    cf->add_option("--n", fq.n)->required();
    cf->add_option("--d", fq.d)->required();
    cf->add_option("--m", fq.m)->required();
    cf->add_option("--r", fq.r)->required();
    cf->add_flag("--piecewise", piecewise, "use the piecewise display");
    cf->callback([&] {
        Int v = piecewise ? counting::pfaff_count_piecewise(fq) : counting::pfaff_count(fq);
        out.emit({{"count", int_json(v)}});
    });

    // count-fields ----------------------------------------------------------
    auto* cv = app.add_subcommand("count-fields", "closed-formula count of tangent vector fields");
    counting::VfCountQuery vq{3, 0, 1};
    cv->add_option("--n", vq.n)->required();
    cv->add_option("--m", vq.m)->required();
    cv->add_option("--d", vq.d)->required();
    cv->callback([&] { out.emit({{"count", int_json(counting::vf_count(vq))}}); });

    // oracle-forms ----------------------------------------------------------
    auto* of = app.add_subcommand("oracle-forms", "kernel-computed invariant-form count");
    int of_m = 0, of_r = 1, of_n = 3, of_d = 1;
    std::string of_field;
    std::vector<int> of_a;
    of->add_option("--m", of_m)->required();
    of->add_option("--r", of_r)->required();
    of->add_option("--field", of_field, "vector field as a JSON file");
    of->add_option("--n", of_n, "build the coupled monomial field on P^n (n odd)");
    of->add_option("--d", of_d, "its degree");
    of->add_option("--a", of_a, "its coefficients, comma separated")->delimiter(',');
    of->callback([&] {
        PolyVectorField X = !of_field.empty()
                                ? field_from_json(load_json(of_field))
                                : counting::example_field(
                                      of_n, of_d,
                                      of_a.empty() ? to_rats(std::vector<int>(of_n + 1, 1))
                                                   : to_rats(of_a));
        json j = {{"count", int_json(counting::oracle_pfaff_count(X, of_m, of_r))},
                  {"columns", int_json(counting::oracle_matrix_cols(X.n(), of_r, of_m))}};
        out.emit(j);
    });

    // oracle-fields ---------------------------------------------------------
    auto* ov = app.add_subcommand("oracle-fields", "kernel-computed tangent-field count");
    int ov_m = 0, ov_d = 1, ov_n = 3;
    std::string ov_form;
    ov->add_option("--m", ov_m)->required();
    ov->add_option("--d", ov_d)->required();
    ov->add_option("--form", ov_form, "1-form as a JSON file");
    ov->add_option("--n", ov_n, "sample a seeded degree-m 1-form on P^n instead");
    ov->callback([&] {
        PolyForm w = !ov_form.empty() ? form_from_json(load_json(ov_form))
                                      : seeded_projective_form(ov_n, 1, ov_m, seed);
        out.emit({{"count", int_json(counting::oracle_vf_count(w, ov_m, ov_d))}});
    });

    // check-flag ------------------------------------------------------------
    auto* chf = app.add_subcommand("check-flag", "flag test: field-form (exact) or form-form "
                                                 "(sampled pointwise)");
    std::string chf_field, chf_form, chf_form2;
    int chf_example = 0, chf_points = 20;
    std::vector<int> chf_a = {1, 1, 1, 1};
    chf->add_option("--field", chf_field, "vector field JSON file");
    chf->add_option("--form", chf_form, "form JSON file");
    chf->add_option("--form2", chf_form2, "second form JSON file (sampled mode)");
    chf->add_option("--example", chf_example, "use the coupled pair on P^3 of this degree");
    chf->add_option("--a", chf_a, "its four coefficients")->delimiter(',');
    chf->add_option("--points", chf_points, "sample count")->capture_default_str();
    chf->callback([&] {
        bool ok;
        std::string mode;
        if (chf_example > 0) {
            auto [X, w] = flags::example_5_1(chf_example, to_rats(chf_a));
            ok = flags::check_vf_form_flag(X, w);
            mode = "symbolic";
        } else if (!chf_field.empty() && !chf_form.empty()) {
            ok = flags::check_vf_form_flag(field_from_json(load_json(chf_field)),
                                           form_from_json(load_json(chf_form)));
            mode = "symbolic";
        } else if (!chf_form.empty() && !chf_form2.empty()) {
            ok = flags::check_flag_sampled(form_from_json(load_json(chf_form)),
                                           form_from_json(load_json(chf_form2)), seed, chf_points);
            mode = "sampled";
        } else {
            throw CLI::ValidationError("check-flag",
                                       "need --example, --field/--form, or --form/--form2");
        }
        out.emit({{"flag", ok}, {"mode", mode}});
        if (!ok) rc = 1;
    });

    // check-integrable ------------------------------------------------------
    auto* chi = app.add_subcommand("check-integrable", "Frobenius condition w ^ dw = 0");
    std::string chi_form;
    int chi_example = 0;
    std::vector<int> chi_a = {1, 1, 1, 1};
    chi->add_option("--form", chi_form, "1-form JSON file");
    chi->add_option("--example", chi_example, "use the coupled pair's 1-form of this degree");
    chi->add_option("--a", chi_a, "its four coefficients")->delimiter(',');
    chi->callback([&] {
        PolyForm w = chi_example > 0 ? flags::example_5_1(chi_example, to_rats(chi_a)).second
                                     : form_from_json(load_json(chi_form));
        bool ok = flags::check_integrability_codim1(w);
        out.emit({{"integrable", ok}});
        if (!ok) rc = 1;
    });

    // check-decomposable ----------------------------------------------------
    auto* chd = app.add_subcommand("check-decomposable", "decomposability w ^ w = 0 of a 2-form");
    std::string chd_form;
    chd->add_option("--form", chd_form, "2-form JSON file")->required();
    chd->callback([&] {
        bool ok = flags::check_decomposable_2form(form_from_json(load_json(chd_form)));
        out.emit({{"decomposable", ok}});
        if (!ok) rc = 1;
    });

    // slope -----------------------------------------------------------------
    auto* sl = app.add_subcommand("slope", "Mumford-Takemoto slope (dim - deg)/dim");
    int sl_dim = 1;
    std::int64_t sl_deg = 0;
    sl->add_option("--dim", sl_dim)->required();
    sl->add_option("--deg", sl_deg)->required();
    sl->callback([&] { out.emit({{"slope", rat_json(bounds::slope(sl_dim, Int(sl_deg)))}}); });

    // bounds ----------------------------------------------------------------
    auto* bd = app.add_subcommand("bounds", "degree-inequality calculators");
    std::string bd_id, bd_case;
    bounds::LogarithmicData ld;
    bounds::PullbackData pd;
    int bd_deg_f = 0, bd_deg_g = 0, bd_deg_d = 0, bd_dim_d = 1, bd_n = 3, bd_m = 0, bd_k = 0,
        bd_d = 1, bd_abs_d = 0, bd_di = 0;
    std::vector<int> bd_degrees, bd_index_set;
    int bd_index = 0, bd_reg = 0, bd_p = 1, bd_r = 1;
    bd->add_option("theorem", bd_id,
                   "cor1.2 | cor1.4 | cor1.5 | cor1.7 | cor6.2 | cor6.6 | thm6.1 | thm6.3 | thm6.5")
        ->required();
    bd->add_option("--case", bd_case, "case name within thm6.1 / thm6.3 / thm6.5");
    bd->add_option("--deg-f", bd_deg_f);
    bd->add_option("--deg-g", bd_deg_g);
    bd->add_option("--deg-d", bd_deg_d);
    bd->add_option("--dim-d", bd_dim_d);
    bd->add_option("--n", bd_n);
    bd->add_option("--p", bd_p);
    bd->add_option("--m", bd_m);
    bd->add_option("--k", bd_k);
    bd->add_option("--r", bd_r);
    bd->add_option("--d", bd_d);
    bd->add_option("--abs-d", bd_abs_d);
    bd->add_option("--d-i", bd_di);
    bd->add_option("--degrees", bd_degrees)->delimiter(',');
    bd->add_option("--index", bd_index);
    bd->add_option("--index-set", bd_index_set)->delimiter(',');
    bd->add_option("--regularity", bd_reg);
    bd->callback([&] {
        using namespace bounds;
        auto emit_report = [&](const BoundReport& rep) {
            json j = rep.to_json();
            j["lhs"] = rat_json(rep.lhs);
            j["rhs"] = rat_json(rep.rhs);
            out.emit(j);
            if (!rep.holds) rc = 1;
        };
        auto emit_verdict = [&](StabilityVerdict v) { out.emit({{"verdict", to_string(v)}}); };
        if (bd_id == "cor1.2") {
            emit_report(corollary_1_2_check(bd_deg_f, bd_deg_g));
        } else if (bd_id == "cor1.4") {
            emit_report(corollary_1_4_check(bd_deg_d, bd_dim_d, bd_deg_g));
        } else if (bd_id == "cor1.5") {
            out.emit({{"verdict", to_string(corollary_1_5_verdict(bd_n, bd_deg_f, bd_deg_g))}});
        } else if (bd_id == "cor1.7") {
            emit_verdict(corollary_1_7_verdict(bd_m));
        } else if (bd_id == "cor6.2") {
            emit_verdict(corollary_6_2_verdict(bd_n, bd_abs_d, bd_di));
        } else if (bd_id == "cor6.6") {
            emit_verdict(corollary_6_6_verdict(bd_n, bd_k, bd_d));
        } else if (bd_id == "thm6.1") {
            LogCase c;
            if (bd_case == "smooth-hypersurface") c = LogCase::SmoothHypersurface;
            else if (bd_case == "normal-crossing") c = LogCase::NormalCrossing;
            else if (bd_case == "curve-smooth") c = LogCase::CurveSmooth;
            else if (bd_case == "curve-nodal") c = LogCase::CurveNodal;
            else if (bd_case == "ci-regularity") c = LogCase::CI_Regularity;
            else if (bd_case == "ci-nonsing-codim1") c = LogCase::CI_NonsingCodim1;
            else throw CLI::ValidationError("--case", "unknown thm6.1 case: " + bd_case);
            ld.n = bd_n, ld.p = bd_p, ld.degrees = bd_degrees, ld.selected_index = bd_index;
            ld.index_set = bd_index_set, ld.regularity = bd_reg, ld.deg_F = bd_deg_f;
            emit_report(logarithmic_bounds(ld, c));
        } else if (bd_id == "thm6.3") {
            PullbackCase c;
            if (bd_case == "invariant-smooth") c = PullbackCase::InvariantSmooth;
            else if (bd_case == "invariant-nc") c = PullbackCase::InvariantNC;
            else if (bd_case == "singcomp-regularity") c = PullbackCase::SingCompIntRegularity;
            else if (bd_case == "singcomp-nonsing-codim1")
                c = PullbackCase::SingCompIntNonsingCodim1;
            else throw CLI::ValidationError("--case", "unknown thm6.3 case: " + bd_case);
            pd.n = bd_n, pd.m = bd_m, pd.k = bd_k, pd.r = bd_r, pd.d = bd_d;
            pd.degrees = bd_degrees, pd.regularity = bd_reg, pd.deg_F = bd_deg_f;
            emit_report(pullback_bounds(pd, c));
        } else if (bd_id == "thm6.5") {
            DecompVariant v;
            if (bd_case == "general") v = DecompVariant::General;
            else if (bd_case == "complete-intersection") v = DecompVariant::CompleteIntersection;
            else if (bd_case == "equal-degrees") v = DecompVariant::EqualDegrees;
            else throw CLI::ValidationError("--case", "unknown thm6.5 variant: " + bd_case);
            emit_report(decomposable_bound(bd_deg_d, bd_degrees, v));
        } else {
            throw CLI::ValidationError("theorem", "unknown theorem id: " + bd_id);
        }
    });

    // verify-grid -----------------------------------------------------------
    auto* vg = app.add_subcommand("verify-grid",
                                  "formula-vs-oracle grid: one pass/fail row per cell");
    int vg_n = 3, vg_dmax = 2, vg_mmax = 5, vg_rmax = 1;
    std::vector<int> vg_a;
    vg->add_option("--n", vg_n)->capture_default_str();
    vg->add_option("--d-max", vg_dmax)->capture_default_str();
    vg->add_option("--m-max", vg_mmax)->capture_default_str();
    vg->add_option("--r-max", vg_rmax)->capture_default_str();
    vg->add_option("--a", vg_a, "coefficients for the coupled field (odd n)")->delimiter(',');
    vg->callback([&] {
        // Cost gate first: refuse rather than stall on a huge kernel.
        for (int r = 1; r <= vg_rmax; ++r)
            for (int m = 0; m <= vg_mmax; ++m) {
                Int cols = counting::oracle_matrix_cols(vg_n, r, m);
                if (cols > 20000)
                    throw CLI::ValidationError(
                        "verify-grid", "cell r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                           " needs " + cols.str() + " columns (limit 20000)");
            }
        json rows = json::array();
        bool all_ok = true;
        for (int d = 1; d <= vg_dmax; ++d) {
            PolyVectorField X =
                vg_n % 2 == 1
                    ? counting::example_field(
                          vg_n, d,
                          vg_a.empty() ? to_rats(std::vector<int>(vg_n + 1, 1)) : to_rats(vg_a))
                    : seeded_linear_field(vg_n, d, seed + d);
            for (int r = 1; r <= vg_rmax; ++r)
                for (int m = 0; m <= vg_mmax; ++m) {
                    Int formula = counting::pfaff_count({vg_n, d, m, r});
                    Int oracle = counting::oracle_pfaff_count(X, m, r);
                    bool ok = formula == oracle;
                    all_ok &= ok;
                    rows.push_back({{"d", d},
                                    {"r", r},
                                    {"m", m},
                                    {"formula", int_json(formula)},
                                    {"oracle", int_json(oracle)},
                                    {"ok", ok}});
                }
        }
        if (out.format == "json") {
            out.emit({{"n", vg_n}, {"rows", rows}, {"ok", all_ok}});
        } else {
            std::cout << "d,r,m,formula,oracle,ok\n";
            for (const auto& row : rows)
                std::cout << row["d"] << "," << row["r"] << "," << row["m"] << ","
                          << row["formula"] << "," << row["oracle"] << ","
                          << (row["ok"].get<bool>() ? "pass" : "FAIL") << "\n";
        }
        if (!all_ok) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help requests exit 0; every malformed invocation exits 2
        return app.exit(e) == 0 ? 0 : 2;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const counting::PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
