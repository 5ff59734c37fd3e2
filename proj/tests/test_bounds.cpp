#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfaff/bounds.hpp"

using namespace pfaff;
using namespace pfaff::bounds;

TEST_CASE("slope values from the stability proofs") {
    CHECK(slope(1, 3) == Rat(-2));      // 1 - d at d = 3
    CHECK(slope(2, 3) == Rat(-1, 2));   // (2 - m)/2 at m = 3
    CHECK(slope(2, 2) == Rat(0));
    CHECK(slope(5, 5) == Rat(0));
    CHECK_THROWS_AS(slope(0, 1), std::invalid_argument);
}

TEST_CASE("corollary 1.2") {
    for (int d : {1, 2, 3}) {
        CHECK(corollary_1_2_check(d, 2 * d).holds); // Example 5.1 degrees
        auto eq = corollary_1_2_check(d, d);        // Example 5.2, sharp
        CHECK(eq.holds);
        CHECK(eq.lhs == eq.rhs);
    }
    CHECK_FALSE(corollary_1_2_check(3, 2).holds);
}

TEST_CASE("corollary 1.4") {
    auto eq = corollary_1_4_check(4, 2, 2);
    CHECK(eq.holds);
    CHECK(eq.lhs == eq.rhs);
    CHECK_FALSE(corollary_1_4_check(5, 2, 2).holds);
    // Split tangent sheaf: k fields of degree d each against deg_G = d.
    for (int k = 1; k <= 4; ++k)
        for (int d = 1; d <= 3; ++d) CHECK(corollary_1_4_check(k * d, k, d).holds);
}

TEST_CASE("corollary 1.5 verdict") {
    CHECK(corollary_1_5_verdict(4, 7, 5) == FlagVerdict::NoSuchFlag);
    CHECK(corollary_1_5_verdict(3, 1, 2) == FlagVerdict::NotExcluded); // deg_F = 1*2 - 1
    CHECK(corollary_1_5_verdict(3, 2, 2) == FlagVerdict::NoSuchFlag);
    CHECK(corollary_1_5_verdict(5, 3, 2) == FlagVerdict::NotExcluded); // 3 = 2*2 - 1
}

TEST_CASE("corollary 1.7 verdict and slope comparison") {
    CHECK(corollary_1_7_verdict(3) == StabilityVerdict::Stable);
    CHECK(corollary_1_7_verdict(2) == StabilityVerdict::SemistableOnly);
    CHECK_THROWS_AS(corollary_1_7_verdict(1), std::invalid_argument);

    // mu(T_F) = 1 - d vs mu(T_D) = (2 - m)/2 at d = m - 1.
    for (int m = 3; m <= 8; ++m) CHECK(slope(1, m - 1) < slope(2, m));
    CHECK(slope(1, 1) == slope(2, 2));
}

namespace {

LogarithmicData log_data(int n, int p, std::vector<int> degrees, int i, std::vector<int> iset,
                         int R, int deg_F) {
    LogarithmicData d;
    d.n = n;
    d.p = p;
    d.degrees = std::move(degrees);
    d.selected_index = i;
    d.index_set = std::move(iset);
    d.regularity = R;
    d.deg_F = deg_F;
    return d;
}

} // namespace

TEST_CASE("theorem 6.1 fixture table") {
    auto r1 = logarithmic_bounds(log_data(4, 1, {2, 3}, 1, {}, 0, 3), LogCase::SmoothHypersurface);
    CHECK(r1.lhs == 3);
    CHECK(r1.rhs == 5);
    CHECK(r1.holds);

    auto r2 = logarithmic_bounds(log_data(3, 1, {1, 1}, 1, {}, 0, 1), LogCase::NormalCrossing);
    CHECK(r2.lhs == 0);
    CHECK(r2.rhs == 3);
    CHECK(r2.holds);

    auto r3 = logarithmic_bounds(log_data(3, 1, {2, 2}, 0, {1, 2}, 0, 2), LogCase::CurveSmooth);
    CHECK(r3.lhs == 2);
    CHECK(r3.rhs == 2);
    CHECK(r3.holds);

    auto r4 = logarithmic_bounds(log_data(3, 1, {2, 2}, 0, {1, 2}, 0, 2), LogCase::CurveNodal);
    CHECK(r4.rhs == 3);
    CHECK(r4.holds);

    auto r5 = logarithmic_bounds(log_data(4, 1, {2, 2, 1}, 0, {1, 2}, 1, 2), LogCase::CI_Regularity);
    CHECK(r5.lhs == 3);
    CHECK(r5.rhs == 3); // small-regularity branch
    CHECK(r5.holds);

    auto r6 = logarithmic_bounds(log_data(4, 1, {2, 2, 1}, 0, {1, 2}, 2, 2), LogCase::CI_Regularity);
    CHECK(r6.rhs == Rat(7, 2)); // large-regularity branch, exact rational
    CHECK(r6.holds);

    auto r7 =
        logarithmic_bounds(log_data(4, 1, {2, 2, 1}, 0, {1, 2}, 0, 2), LogCase::CI_NonsingCodim1);
    CHECK(r7.rhs == 4);
    CHECK(r7.holds);

    CHECK_THROWS_AS(logarithmic_bounds(log_data(4, 1, {2, 2}, 0, {1, 2}, 0, 2), LogCase::CurveSmooth),
                    std::invalid_argument); // needs n = p+2
    CHECK_THROWS_AS(logarithmic_bounds(log_data(3, 2, {1, 1}, 1, {}, 0, 1),
                                       LogCase::SmoothHypersurface),
                    std::invalid_argument); // r < p+1
}

TEST_CASE("normal-crossing bound is always weaker by n-1") {
    for (int n = 3; n <= 6; ++n)
        for (int p = 1; p <= n - 2; ++p)
            for (int deg_F = 0; deg_F <= 3; ++deg_F) {
                std::vector<int> degs(p + 1, 2);
                auto a = logarithmic_bounds(log_data(n, p, degs, 1, {}, 0, deg_F),
                                            LogCase::SmoothHypersurface);
                auto b = logarithmic_bounds(log_data(n, p, degs, 1, {}, 0, deg_F),
                                            LogCase::NormalCrossing);
                CHECK(b.rhs - a.rhs == n - 1);
                CHECK(b.rhs > a.rhs);
            }
}

TEST_CASE("corollary 6.2 verdict") {
    CHECK(corollary_6_2_verdict(6, 5, 2) == StabilityVerdict::Stable);
    CHECK(corollary_6_2_verdict(5, 5, 2) == StabilityVerdict::Semistable);
    CHECK(corollary_6_2_verdict(4, 5, 2) == StabilityVerdict::Inconclusive);
}

namespace {

PullbackData pb_data(int n, int m, int k, int r, int d, std::vector<int> degrees, int R, int deg_F) {
    PullbackData x;
    x.n = n;
    x.m = m;
    x.k = k;
    x.r = r;
    x.d = d;
    x.degrees = std::move(degrees);
    x.regularity = R;
    x.deg_F = deg_F;
    return x;
}

} // namespace

TEST_CASE("theorem 6.3 fixture table") {
    auto r1 = pullback_bounds(pb_data(4, 1, 1, 1, 1, {}, 0, 2), PullbackCase::InvariantSmooth);
    CHECK(r1.lhs == 1);
    CHECK(r1.rhs == 7);
    CHECK(r1.holds);

    auto r2 = pullback_bounds(pb_data(4, 1, 1, 1, 1, {}, 0, 2), PullbackCase::InvariantNC);
    CHECK(r2.rhs == 16);
    CHECK(r2.holds);

    // Corollary 6.4 specialization: r = 1, isolated singular point, s = 2.
    auto r3 = pullback_bounds(pb_data(4, 2, 1, 1, 0, {1, 1}, 1, 2),
                              PullbackCase::SingCompIntRegularity);
    CHECK(r3.lhs == 4);
    CHECK(r3.rhs == 4); // ((k+2)/2) deg_F + k
    CHECK(r3.holds);

    auto r4 = pullback_bounds(pb_data(4, 2, 1, 1, 0, {1, 1}, 2, 2),
                              PullbackCase::SingCompIntRegularity);
    CHECK(r4.rhs == Rat(19, 4)); // ((k+2)/4)(deg_F + R + 1) + k
    CHECK(r4.holds);

    auto r5 = pullback_bounds(pb_data(4, 2, 1, 1, 0, {1, 1}, 0, 2),
                              PullbackCase::SingCompIntNonsingCodim1);
    CHECK(r5.rhs == Rat(11, 2));
    CHECK(r5.holds);

    // Degree-1 trivial map: lhs = 0.
    auto r6 = pullback_bounds(pb_data(3, 1, 0, 1, 1, {}, 0, 0), PullbackCase::InvariantSmooth);
    CHECK(r6.lhs == 0);
    CHECK(r6.holds);

    CHECK_THROWS_AS(pullback_bounds(pb_data(2, 1, 1, 1, 1, {}, 0, 0), PullbackCase::InvariantSmooth),
                    std::invalid_argument); // n < r+2
}

TEST_CASE("theorem 6.5 fixture table") {
    auto r1 = decomposable_bound(2, {3, 4}, DecompVariant::General);
    CHECK(r1.lhs == 3);
    CHECK(r1.rhs == 3);
    CHECK(r1.holds);

    auto r2 = decomposable_bound(2, {2, 2}, DecompVariant::CompleteIntersection);
    CHECK(r2.lhs == 0);
    CHECK(r2.rhs == 2);
    CHECK(r2.holds);

    auto r3 = decomposable_bound(1, {2, 2}, DecompVariant::EqualDegrees);
    CHECK(r3.lhs == 1);
    CHECK(r3.rhs == 3);
    CHECK(r3.holds);

    CHECK_THROWS_AS(decomposable_bound(1, {}, DecompVariant::General), std::invalid_argument);
    CHECK_THROWS_AS(decomposable_bound(1, {2, 3}, DecompVariant::EqualDegrees),
                    std::invalid_argument);
}

TEST_CASE("corollary 6.6 verdict") {
    CHECK(corollary_6_6_verdict(3, 1, 2) == StabilityVerdict::Semistable);
    CHECK(corollary_6_6_verdict(4, 1, 3) == StabilityVerdict::Stable);
    CHECK(corollary_6_6_verdict(5, 3, 2) == StabilityVerdict::Inconclusive);
}

TEST_CASE("reports echo their verdict consistently") {
    for (const auto& rep :
         {corollary_1_2_check(2, 4), corollary_1_4_check(5, 2, 2),
          decomposable_bound(2, {3, 4}, DecompVariant::General)}) {
        CHECK(rep.holds == (rep.strict ? rep.lhs < rep.rhs : rep.lhs <= rep.rhs));
        auto j = rep.to_json();
        CHECK(j.contains("lhs"));
        CHECK(j.contains("inputs"));
    }
}
