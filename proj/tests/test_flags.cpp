#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfaff/flags.hpp"

using namespace pfaff;
using namespace pfaff::flags;

namespace {

PolyForm random_projective_2form(std::mt19937_64& rng, int n) {
    // i_theta of a random constant-coefficient 3-form is projective.
    PolyForm theta3(n, 3);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                int c = coef(rng);
                if (c != 0) theta3.add_term({i, j, k}, Monomial::one(n + 1), c);
            }
    return interior(radial_field(n), theta3);
}

} // namespace

TEST_CASE("vf-form flag on the coupled example pair") {
    for (int d : {1, 2, 3}) {
        auto [X, w] = example_5_1(d, {1, 1, 1, 1});
        CHECK(check_vf_form_flag(X, w));
        CHECK(is_projective_form(w, 2 * d));
        CHECK(degree_of_pfaff(w) == 2 * d);
        CHECK(X.homogeneous_degree() == d);
    }
    auto [X, w] = example_5_1(3, {2, -1, 1, 5});
    CHECK(check_vf_form_flag(X, w));
    CHECK(degree_of_pfaff(w) == 6);
}

TEST_CASE("vf-form flag fails on a generic form") {
    auto [X, w_unused] = example_5_1(1, {1, 1, 1, 1});
    PolyForm generic(3, 1);
    generic.add_term({0}, Monomial::var(4, 1), 1);
    generic.add_term({1}, Monomial::var(4, 0), -1);
    generic.add_term({2}, Monomial::var(4, 3), 2);
    generic.add_term({3}, Monomial::var(4, 2), -2);
    CHECK_FALSE(check_vf_form_flag(X, generic));
}

TEST_CASE("i_X of a projective form always yields a flag with X") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        PolyForm theta = random_projective_2form(rng, n);
        PolyVectorField X(n);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int i = 0; i <= n; ++i) {
            int c = coef(rng);
            if (c != 0) X.component(i).add_term(Monomial::var(n + 1, i), c);
        }
        if (X.is_zero() || theta.is_zero()) continue;
        PolyForm w = interior(X, theta);
        CHECK(check_vf_form_flag(X, w)); // i_X o i_X = 0
    }
}

TEST_CASE("pointwise kernel containment") {
    // Reflexivity at a regular point.
    auto [X, w] = example_5_1(1, {1, 1, 1, 1});
    std::vector<Rat> p{1, 2, 1, 3};
    CHECK(check_kernel_containment_at_point(w, w, p));

    // Two generic hyperplane kernels are incomparable.
    PolyForm w1(3, 1), w2(3, 1);
    w1.add_term({0}, Monomial::var(4, 1), 1);
    w1.add_term({1}, Monomial::var(4, 0), -1);
    w2.add_term({2}, Monomial::var(4, 3), 1);
    w2.add_term({3}, Monomial::var(4, 2), -1);
    CHECK_FALSE(check_kernel_containment_at_point(w1, w2, p));

    // Singular points are rejected, reporting which leg vanished.
    CHECK_THROWS_AS(check_kernel_containment_at_point(w1, w2, {0, 0, 1, 1}), SingularPoint);
}

TEST_CASE("symbolic flag implies sampled pointwise membership") {
    std::uint64_t state = 42;
    for (int d : {1, 2}) {
        auto [X, w] = example_5_1(d, {1, -1, 2, 3});
        for (int i = 0; i < 20; ++i) {
            auto p = sample_regular_point(3, {&w}, {&X}, state);
            CHECK(check_vf_kernel_membership_at_point(X, w, p));
            CHECK(check_vf_kernel_membership_at_point(radial_field(3), w, p));
        }
    }
}

TEST_CASE("integrability in codimension one") {
    auto [X, w] = example_5_1(2, {1, 1, 1, 1});
    CHECK(check_integrability_codim1(w)); // rational first integral G/F

    PolyForm nonint(3, 1);
    nonint.add_term({0}, Monomial::var(4, 1), 1);
    nonint.add_term({1}, Monomial::var(4, 0), -1);
    nonint.add_term({2}, Monomial::var(4, 3), 1);
    nonint.add_term({3}, Monomial::var(4, 2), -1);
    CHECK_FALSE(check_integrability_codim1(nonint));

    CHECK_THROWS_AS(check_integrability_codim1(PolyForm::zero(3, 2)), std::invalid_argument);
}

TEST_CASE("decomposability of 2-forms") {
    PolyForm simple = wedge(PolyForm::dz(3, 0), PolyForm::dz(3, 1));
    CHECK(check_decomposable_2form(simple));

    PolyForm sum = simple + wedge(PolyForm::dz(3, 2), PolyForm::dz(3, 3));
    CHECK_FALSE(check_decomposable_2form(sum));

    // Contraction of the volume form along three fields is decomposable.
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 4;
        auto rand_linear = [&] {
            PolyVectorField X(n);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    int c = coef(rng);
                    if (c != 0) X.component(i).add_term(Monomial::var(n + 1, j), c);
                }
            return X;
        };
        PolyVectorField X = rand_linear(), Y = rand_linear();
        PolyForm w = interior(X, interior(Y, interior(radial_field(n), PolyForm::volume(n))));
        if (w.is_zero()) continue;
        CHECK(check_decomposable_2form(w));
    }

    CHECK_THROWS_AS(check_decomposable_2form(PolyForm::zero(3, 1)), std::invalid_argument);
}

TEST_CASE("example_5_1 guards and degree bookkeeping") {
    CHECK_THROWS_AS(example_5_1(0, {1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(example_5_1(1, {1, 0, 1, 1}), std::invalid_argument);

    PolyForm w(3, 1);
    w.add_term({0}, Monomial::var(4, 1), 1);
    w.add_term({1}, Monomial::var(4, 0), -1);
    CHECK(degree_of_pfaff(w) == 0);

    PolyForm mixed(3, 1);
    mixed.add_term({0}, Monomial::var(4, 1), 1);
    mixed.add_term({1}, Monomial::var(4, 0, 2), 1);
    CHECK_THROWS_AS(degree_of_pfaff(mixed), std::invalid_argument);
}

TEST_CASE("check_flag_sampled is reproducible and consistent") {
    auto [X, w] = example_5_1(1, {1, 1, 1, 1});
    // A form against itself: containment must hold at every sampled point.
    CHECK(check_flag_sampled(w, w, 0));
    CHECK(check_flag_sampled(w, w, 123));
}
