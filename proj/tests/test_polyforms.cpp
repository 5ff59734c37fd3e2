#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfaff/bott.hpp"
#include "pfaff/polyform.hpp"

using namespace pfaff;

namespace {

PolyForm random_form(std::mt19937_64& rng, int n, int r, int coeff_deg, int nterms = 4) {
    PolyForm w(n, r);
    std::uniform_int_distribution<int> var(0, n);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> idx(r);
        for (int& i : idx) i = var(rng);
        Monomial m = Monomial::one(n + 1);
        for (int e = 0; e < coeff_deg; ++e) m.exps[var(rng)] += 1;
        int c = coef(rng);
        if (c != 0) w.add_term(std::move(idx), std::move(m), c);
    }
    return w;
}

PolyVectorField random_field(std::mt19937_64& rng, int n, int deg, int nterms = 3) {
    PolyVectorField X(n);
    std::uniform_int_distribution<int> var(0, n);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int i = 0; i <= n; ++i)
        for (int t = 0; t < nterms; ++t) {
            Monomial m = Monomial::one(n + 1);
            for (int e = 0; e < deg; ++e) m.exps[var(rng)] += 1;
            int c = coef(rng);
            if (c != 0) X.component(i).add_term(std::move(m), c);
        }
    return X;
}

Polynomial random_homogeneous_poly(std::mt19937_64& rng, int nvars, int deg) {
    Polynomial p(nvars);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 4; ++t) {
        Monomial m = Monomial::one(nvars);
        for (int e = 0; e < deg; ++e) m.exps[var(rng)] += 1;
        int c = coef(rng);
        if (c != 0) p.add_term(std::move(m), c);
    }
    return p;
}

} // namespace

TEST_CASE("wedge basics") {
    const int n = 3;
    PolyForm dz0 = PolyForm::dz(n, 0), dz1 = PolyForm::dz(n, 1);
    CHECK(wedge(dz0, dz0).is_zero());
    PolyForm ab = wedge(dz0, dz1), ba = wedge(dz1, dz0);
    CHECK(ab == -ba);
    CHECK(ab.terms().size() == 1);
    CHECK(ab.terms().begin()->second == 1);

    PolyForm a = PolyForm::term(n, {0}, Monomial::var(4, 1), 1); // z_1 dz_0
    PolyForm b = PolyForm::term(n, {1}, Monomial::var(4, 0), 1); // z_0 dz_1
    PolyForm expect(n, 2);
    expect.add_term({0, 1}, Monomial::var(4, 0) * Monomial::var(4, 1), 1);
    CHECK(wedge(a, b) == expect);

    PolyForm other(2, 1);
    CHECK_THROWS_AS(wedge(dz0, other), std::invalid_argument);
}

TEST_CASE("interior contraction basics") {
    const int n = 3;
    PolyVectorField theta = radial_field(n);
    for (int i = 0; i <= n; ++i) {
        PolyForm got = interior(theta, PolyForm::dz(n, i));
        CHECK(got == PolyForm::scalar(Polynomial::monomial(Monomial::var(4, i), 1)));
    }
    // i_{d/dz_0} (dz_0 ^ dz_1) = dz_1
    PolyVectorField e0 = PolyVectorField::term(n, 0, Monomial::one(4), 1);
    PolyForm w = wedge(PolyForm::dz(n, 0), PolyForm::dz(n, 1));
    CHECK(interior(e0, w) == PolyForm::dz(n, 1));

    CHECK_THROWS_AS(interior(theta, PolyForm::zero(n, 0)), std::invalid_argument);
}

TEST_CASE("exterior derivative basics") {
    const int n = 3;
    // d(z_0 dz_1) = dz_0 ^ dz_1
    PolyForm w = PolyForm::term(n, {1}, Monomial::var(4, 0), 1);
    CHECK(exterior_derivative(w) == wedge(PolyForm::dz(n, 0), PolyForm::dz(n, 1)));

    // d(F dG - G dF) = 2 dF ^ dG for F = z_0^2, G = z_1^2
    Polynomial F = Polynomial::monomial(Monomial::var(4, 0, 2), 1);
    Polynomial G = Polynomial::monomial(Monomial::var(4, 1, 2), 1);
    auto one_form = [&](const Polynomial& A, const Polynomial& B) {
        // A dB
        PolyForm out(n, 1);
        for (int i = 0; i <= n; ++i) {
            Polynomial coef = A * B.derivative(i);
            for (const auto& [m, c] : coef.terms()) out.add_term({i}, m, c);
        }
        return out;
    };
    PolyForm fdg_gdf = one_form(F, G) - one_form(G, F);
    PolyForm dF = one_form(Polynomial::monomial(Monomial::one(4), 1), F);
    PolyForm dG = one_form(Polynomial::monomial(Monomial::one(4), 1), G);
    CHECK(exterior_derivative(fdg_gdf) == wedge(dF, dG) * Rat(2));
}

TEST_CASE("algebra identities on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int ra = 1 + static_cast<int>(rng() % 2), rb = 1 + static_cast<int>(rng() % 2);
        PolyForm a = random_form(rng, n, ra, 1 + static_cast<int>(rng() % 2));
        PolyForm b = random_form(rng, n, rb, 1 + static_cast<int>(rng() % 2));
        PolyForm c = random_form(rng, n, 1, 1);
        PolyVectorField X = random_field(rng, n, 1);

        // Anticommutativity.
        PolyForm ab = wedge(a, b), ba = wedge(b, a);
        CHECK(ab == (ra * rb % 2 == 0 ? ba : -ba));

        // Associativity.
        if (ra + rb + 1 <= n + 1) CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));

        // d o d = 0 and i_X o i_X = 0.
        CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
        if (ab.r() >= 2) CHECK(interior(X, interior(X, ab)).is_zero());

        // Graded Leibniz for the contraction.
        if (ab.r() >= 1 && !ab.is_zero()) {
            PolyForm lhs = interior(X, ab);
            PolyForm rhs = wedge(interior(X, a), b) +
                           (ra % 2 == 0 ? wedge(a, interior(X, b)) : -wedge(a, interior(X, b)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Euler relation and i_theta o i_theta = 0") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int deg = 1 + static_cast<int>(rng() % 4);
        Polynomial F = random_homogeneous_poly(rng, n + 1, deg);
        PolyForm dF = exterior_derivative(PolyForm::scalar(F));
        if (dF.is_zero()) continue;
        CHECK(interior(radial_field(n), dF) == PolyForm::scalar(F * Rat(deg)));

        PolyForm w = random_form(rng, n, 2, 1);
        if (w.r() >= 2)
            CHECK(interior(radial_field(n), interior(radial_field(n), w)).is_zero());
    }
}

TEST_CASE("radial field components") {
    PolyVectorField theta = radial_field(2);
    for (int i = 0; i <= 2; ++i)
        CHECK(theta.component(i) == Polynomial::monomial(Monomial::var(3, i), 1));
}

TEST_CASE("is_projective_form") {
    const int n = 3;
    CHECK_FALSE(is_projective_form(PolyForm::dz(n, 0), -1));

    // z_1 dz_0 - z_0 dz_1 is projective of degree 0.
    PolyForm w(n, 1);
    w.add_term({0}, Monomial::var(4, 1), 1);
    w.add_term({1}, Monomial::var(4, 0), -1);
    CHECK(is_projective_form(w, 0));
    CHECK_FALSE(is_projective_form(w, 1));
}

TEST_CASE("twisted_form_basis dimensions match Bott h^0") {
    CHECK(twisted_form_basis(3, 1, 0).size() == 6);
    CHECK(twisted_form_basis(3, 1, -1).empty());
    CHECK(twisted_form_basis(3, 1, 2).size() == 45);

    for (int n = 3; n <= 4; ++n)
        for (int r = 1; r <= n - 1; ++r)
            for (int m = -2; m <= 3; ++m) {
                auto basis = twisted_form_basis(n, r, m);
                CHECK(Int(basis.size()) == bott::h_omega(n, 0, r, m + r + 1));
                for (const auto& w : basis) CHECK(is_projective_form(w, m));
            }

    // Spot checks further out.
    CHECK(Int(twisted_form_basis(5, 2, 1).size()) == bott::h_omega(5, 0, 2, 4));
    CHECK(Int(twisted_form_basis(3, 2, 4).size()) == bott::h_omega(3, 0, 2, 7));
}
