#ifndef PFAFF_BOUNDS_HPP
#define PFAFF_BOUNDS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfaff/rational.hpp"

namespace pfaff::bounds {

/// Outcome of one inequality calculator: both sides of the bound, the
/// verdict, and an echo of every input that produced it.
struct BoundReport {
    std::string theorem_case;
    Rat lhs;
    Rat rhs;
    bool strict = false; ///< the case demands lhs < rhs rather than <=
    bool holds = false;
    nlohmann::json inputs_echo;
    std::string note;

    nlohmann::json to_json() const;
};

enum class LogCase {
    SmoothHypersurface,
    NormalCrossing,
    CurveSmooth,
    CurveNodal,
    CI_Regularity,
    CI_NonsingCodim1,
};

enum class PullbackCase {
    InvariantSmooth,
    InvariantNC,
    SingCompIntRegularity,
    SingCompIntNonsingCodim1,
};

enum class DecompVariant { General, CompleteIntersection, EqualDegrees };

enum class FlagVerdict { NoSuchFlag, NotExcluded };
enum class StabilityVerdict { Stable, SemistableOnly, Semistable, Inconclusive };

std::string to_string(LogCase c);
std::string to_string(PullbackCase c);
std::string to_string(DecompVariant v);
std::string to_string(FlagVerdict v);
std::string to_string(StabilityVerdict v);

/// Logarithmic-foliation bound data. The selected index i (1-based) drives
/// cases (1)-(2); the index set (1-based, p+1 entries) drives (3)-(4).
/// R is the Castelnuovo-Mumford regularity of Sing(V), always caller-supplied.
struct LogarithmicData {
    int n = 0;
    int p = 0;
    std::vector<int> degrees; // d_1..d_r, each >= 1
    int selected_index = 0;
    std::vector<int> index_set;
    int regularity = 0;
    int deg_F = 0;

    int abs_d() const;
    int selected_degree_sum() const;
};

/// Pull-back foliation bound data (G = F^*(G_0), F of degree m, G_0 of
/// degree k on P^{r+1}).
struct PullbackData {
    int n = 0;
    int m = 0;
    int k = 0;
    int r = 0;
    int d = 0;                // invariant hypersurface degree, cases (1a)/(1b)
    std::vector<int> degrees; // d_1..d_s of the singular component, cases (2a)/(2b)
    int regularity = 0;
    int deg_F = 0;

    int s() const { return static_cast<int>(degrees.size()); }
    int abs_d() const;
};

/// Mumford-Takemoto slope (dim - deg)/dim of a tangent sheaf on P^n.
Rat slope(int dim, const Int& deg);

/// deg(F) <= deg(G) for a flag led by an isolated-singularity foliation.
BoundReport corollary_1_2_check(int deg_F, int deg_G);

/// deg(D) <= dim(D) * deg(G) for a split tangent sheaf.
BoundReport corollary_1_4_check(int deg_D, int dim_D, int deg_G);

/// Nonexistence of flags with dim(F) = codim(G) = 1 and isolated
/// singularities on both legs.
FlagVerdict corollary_1_5_verdict(int n, int deg_F, int deg_G);

/// Stability of an isolated-singularity codimension-one distribution on P^3.
/// Throws std::invalid_argument on m = 1 (inconsistent with isolated
/// singularities).
StabilityVerdict corollary_1_7_verdict(int m);

BoundReport logarithmic_bounds(const LogarithmicData& data, LogCase c);

StabilityVerdict corollary_6_2_verdict(int n, int abs_d, int d_i);

BoundReport pullback_bounds(const PullbackData& data, PullbackCase c);

BoundReport decomposable_bound(int deg_D, const std::vector<int>& omega_degrees,
                               DecompVariant variant);

StabilityVerdict corollary_6_6_verdict(int n, int k, int d);

} // namespace pfaff::bounds

#endif
