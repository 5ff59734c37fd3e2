#include "pfaff/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pfaff::bounds {

namespace {

std::string rat_str(const Rat& q) {
    if (denominator_of(q) == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

BoundReport make_report(std::string id, Rat lhs, Rat rhs, bool strict, nlohmann::json echo,
                        std::string note = {}) {
    BoundReport rep;
    rep.theorem_case = std::move(id);
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.strict = strict;
    rep.holds = strict ? rep.lhs < rep.rhs : rep.lhs <= rep.rhs;
    rep.inputs_echo = std::move(echo);
    rep.note = std::move(note);
    return rep;
}

} // namespace

nlohmann::json BoundReport::to_json() const {
    nlohmann::json j;
    j["case"] = theorem_case;
    j["lhs"] = rat_str(lhs);
    j["rhs"] = rat_str(rhs);
    j["strict"] = strict;
    j["holds"] = holds;
    j["inputs"] = inputs_echo;
    if (!note.empty()) j["note"] = note;
    return j;
}

std::string to_string(LogCase c) {
    switch (c) {
        case LogCase::SmoothHypersurface: return "smooth-hypersurface";
        case LogCase::NormalCrossing: return "normal-crossing";
        case LogCase::CurveSmooth: return "curve-smooth";
        case LogCase::CurveNodal: return "curve-nodal";
        case LogCase::CI_Regularity: return "ci-regularity";
        case LogCase::CI_NonsingCodim1: return "ci-nonsing-codim1";
    }
    return "?";
}

std::string to_string(PullbackCase c) {
    switch (c) {
        case PullbackCase::InvariantSmooth: return "invariant-smooth";
        case PullbackCase::InvariantNC: return "invariant-nc";
        case PullbackCase::SingCompIntRegularity: return "singcomp-regularity";
        case PullbackCase::SingCompIntNonsingCodim1: return "singcomp-nonsing-codim1";
    }
    return "?";
}

std::string to_string(DecompVariant v) {
    switch (v) {
        case DecompVariant::General: return "general";
        case DecompVariant::CompleteIntersection: return "complete-intersection";
        case DecompVariant::EqualDegrees: return "equal-degrees";
    }
    return "?";
}

std::string to_string(FlagVerdict v) {
    return v == FlagVerdict::NoSuchFlag ? "no-such-flag" : "not-excluded";
}

std::string to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::Stable: return "stable";
        case StabilityVerdict::SemistableOnly: return "semistable-only";
        case StabilityVerdict::Semistable: return "semistable";
        case StabilityVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

int LogarithmicData::abs_d() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

int LogarithmicData::selected_degree_sum() const {
    int s = 0;
    for (int i : index_set) {
        if (i < 1 || i > static_cast<int>(degrees.size()))
            throw std::invalid_argument("LogarithmicData: index out of range");
        s += degrees[i - 1];
    }
    return s;
}

int PullbackData::abs_d() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

Rat slope(int dim, const Int& deg) {
    if (dim < 1) throw std::invalid_argument("slope: dim must be >= 1");
    return Rat(Int(dim) - deg, Int(dim));
}

BoundReport corollary_1_2_check(int deg_F, int deg_G) {
    return make_report("cor1.2", deg_F, deg_G, false,
                       {{"deg_F", deg_F}, {"deg_G", deg_G}});
}

BoundReport corollary_1_4_check(int deg_D, int dim_D, int deg_G) {
    if (dim_D < 1) throw std::invalid_argument("corollary_1_4_check: dim_D must be >= 1");
    return make_report("cor1.4", deg_D, Rat(dim_D) * deg_G, false,
                       {{"deg_D", deg_D}, {"dim_D", dim_D}, {"deg_G", deg_G}});
}

FlagVerdict corollary_1_5_verdict(int n, int deg_F, int deg_G) {
    if (n % 2 == 0) return FlagVerdict::NoSuchFlag;
    if (2 * deg_F != (n - 1) * deg_G - 2) return FlagVerdict::NoSuchFlag;
    return FlagVerdict::NotExcluded;
}

StabilityVerdict corollary_1_7_verdict(int m) {
    if (m < 0) throw std::invalid_argument("corollary_1_7_verdict: m must be >= 0");
    if (m == 1)
        throw std::invalid_argument(
            "corollary_1_7_verdict: m = 1 is inconsistent with isolated singularities");
    return m == 2 ? StabilityVerdict::SemistableOnly : StabilityVerdict::Stable;
}

BoundReport logarithmic_bounds(const LogarithmicData& data, LogCase c) {
    const int r = static_cast<int>(data.degrees.size());
    if (r < data.p + 1) throw std::invalid_argument("logarithmic_bounds: need r >= p+1");
    if (data.n < data.p + 2) throw std::invalid_argument("logarithmic_bounds: need n >= p+2");
    for (int d : data.degrees)
        if (d < 1) throw std::invalid_argument("logarithmic_bounds: degrees must be >= 1");

    const int abs_d = data.abs_d();
    const Rat lhs = abs_d - data.p - 1; // deg(G) of the logarithmic p-form

    nlohmann::json echo = {{"n", data.n},           {"p", data.p},
                           {"degrees", data.degrees}, {"deg_F", data.deg_F},
                           {"R", data.regularity},  {"i", data.selected_index},
                           {"index_set", data.index_set}};

    auto need_index = [&] {
        if (data.selected_index < 1 || data.selected_index > r)
            throw std::invalid_argument("logarithmic_bounds: selected index out of range");
        return data.degrees[data.selected_index - 1];
    };
    auto need_index_set = [&] {
        if (static_cast<int>(data.index_set.size()) != data.p + 1)
            throw std::invalid_argument("logarithmic_bounds: index set must have p+1 entries");
        return data.selected_degree_sum();
    };

    const std::string id = "thm6.1/" + to_string(c);
    switch (c) {
        case LogCase::SmoothHypersurface:
            return make_report(id, lhs, Rat(data.deg_F + abs_d - need_index() - data.p), false, echo);
        case LogCase::NormalCrossing:
            return make_report(id, lhs,
                               Rat(data.deg_F + abs_d - need_index() + data.n - data.p - 1), false,
                               echo);
        case LogCase::CurveSmooth:
            if (data.n != data.p + 2)
                throw std::invalid_argument("logarithmic_bounds: curve case needs n = p+2");
            return make_report(id, lhs, Rat(data.deg_F + abs_d - need_index_set()), false, echo);
        case LogCase::CurveNodal:
            if (data.n != data.p + 2)
                throw std::invalid_argument("logarithmic_bounds: curve case needs n = p+2");
            return make_report(id, lhs, Rat(data.deg_F + abs_d - need_index_set() + 1), false, echo);
        case LogCase::CI_Regularity: {
            const int sum = need_index_set();
            if (data.regularity <= sum - data.p - 2)
                return make_report(id, lhs, Rat(data.deg_F + abs_d - sum), false, echo,
                                   "small-regularity branch");
            Rat rhs = Rat(data.deg_F + data.regularity + 1, 2) + abs_d - sum;
            return make_report(id, lhs, rhs, false, echo, "large-regularity branch");
        }
        case LogCase::CI_NonsingCodim1:
            return make_report(id, lhs, Rat(data.deg_F + abs_d - need_index_set() + 1), false, echo);
    }
    throw std::logic_error("logarithmic_bounds: unreachable");
}

StabilityVerdict corollary_6_2_verdict(int n, int abs_d, int d_i) {
    if (n - 2 > abs_d - d_i) return StabilityVerdict::Stable;
    if (n - 2 == abs_d - d_i) return StabilityVerdict::Semistable;
    return StabilityVerdict::Inconclusive;
}

BoundReport pullback_bounds(const PullbackData& data, PullbackCase c) {
    if (data.n < data.r + 2) throw std::invalid_argument("pullback_bounds: need n >= r+2");
    if (data.m < 1) throw std::invalid_argument("pullback_bounds: map degree m must be >= 1");

    const Rat lhs = data.m * (data.k + data.r + 1) - data.r - 1; // deg(G) of the pull-back
    const Rat krp1 = data.k + data.r + 1;

    nlohmann::json echo = {{"n", data.n}, {"m", data.m},      {"k", data.k},
                           {"r", data.r}, {"d", data.d},      {"degrees", data.degrees},
                           {"R", data.regularity}, {"deg_F", data.deg_F}};

    const std::string id = "thm6.3/" + to_string(c);
    switch (c) {
        case PullbackCase::InvariantSmooth:
            if (data.d < 1) throw std::invalid_argument("pullback_bounds: need hypersurface degree d");
            return make_report(id, lhs, krp1 / data.d * (data.deg_F + 1) - data.r - 1, false, echo);
        case PullbackCase::InvariantNC:
            if (data.d < 1) throw std::invalid_argument("pullback_bounds: need hypersurface degree d");
            return make_report(id, lhs, krp1 / data.d * (data.deg_F + data.n) - data.r - 1, false,
                               echo);
        case PullbackCase::SingCompIntRegularity: {
            const int s = data.s();
            if (s < 2) throw std::invalid_argument("pullback_bounds: need codimension s >= 2");
            const int abs_d = data.abs_d();
            if (data.regularity <= data.m * abs_d - s - 1)
                return make_report(id, lhs, krp1 / abs_d * (data.deg_F + s) - data.r - 1, false,
                                   echo, "small-regularity branch");
            Rat rhs = krp1 / (2 * abs_d) * (data.deg_F + data.regularity + 2 * s + 1) - data.r - 1;
            return make_report(id, lhs, rhs, false, echo, "large-regularity branch");
        }
        case PullbackCase::SingCompIntNonsingCodim1: {
            const int s = data.s();
            if (s < 2) throw std::invalid_argument("pullback_bounds: need codimension s >= 2");
            return make_report(id, lhs, krp1 / data.abs_d() * (data.deg_F + s + 1) - data.r - 1,
                               false, echo);
        }
    }
    throw std::logic_error("pullback_bounds: unreachable");
}

BoundReport decomposable_bound(int deg_D, const std::vector<int>& omega_degrees,
                               DecompVariant variant) {
    if (omega_degrees.empty())
        throw std::invalid_argument("decomposable_bound: empty degree list");
    const int k = static_cast<int>(omega_degrees.size());
    const int min_deg = *std::min_element(omega_degrees.begin(), omega_degrees.end());

    nlohmann::json echo = {{"deg_D", deg_D}, {"omega_degrees", omega_degrees}};
    const std::string id = "thm6.5/" + to_string(variant);
    switch (variant) {
        case DecompVariant::General:
            return make_report(id, Rat(min_deg), Rat(deg_D + 1), false, echo);
        case DecompVariant::CompleteIntersection:
            // deg(F_i) = deg(omega_i) - 2 under the codimension-one
            // convention l = deg + 2.
            return make_report(id, Rat(min_deg - 2), Rat(deg_D), false, echo);
        case DecompVariant::EqualDegrees: {
            for (int e : omega_degrees)
                if (e != omega_degrees.front())
                    throw std::invalid_argument("decomposable_bound: degrees must all be equal");
            const int e = omega_degrees.front();
            // deg(G) = sum deg(omega_i) - k - 1: coefficient degrees add
            // under wedge and the twist convention removes k+1.
            return make_report(id, Rat(k * e - k - 1), Rat(k * deg_D + k - 1), false, echo,
                               "deg(G) derived as k*deg(omega) - k - 1");
        }
    }
    throw std::logic_error("decomposable_bound: unreachable");
}

StabilityVerdict corollary_6_6_verdict(int n, int k, int d) {
    if (d < 1) throw std::invalid_argument("corollary_6_6_verdict: d must be >= 1");
    if (n - 2 <= 2 * d - k - 1)
        return n == 3 ? StabilityVerdict::Semistable : StabilityVerdict::Stable;
    return StabilityVerdict::Inconclusive;
}

} // namespace pfaff::bounds
