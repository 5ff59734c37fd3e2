#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfaff/exactla.hpp"

using namespace pfaff;
using namespace pfaff::exactla;

namespace {

RationalMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    RationalMatrix M(rows, cols);
    std::uniform_int_distribution<int> val(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> fill(0, 3);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (fill(rng) == 0) M.set(r, c, Rat(val(rng), den(rng)));
    return M;
}

bool annihilates(const RationalMatrix& M, const std::vector<Rat>& v) {
    for (const auto& x : M.apply(v))
        if (x != 0) return false;
    return true;
}

} // namespace

TEST_CASE("rank of simple matrices") {
    RationalMatrix I(3, 3);
    for (std::size_t i = 0; i < 3; ++i) I.set(i, i, 1);
    CHECK(rank(I) == 3);

    RationalMatrix Z(4, 7);
    CHECK(rank(Z) == 0);

    RationalMatrix P(2, 2);
    P.set(0, 0, 1);
    P.set(0, 1, 2);
    P.set(1, 0, 2);
    P.set(1, 1, 4);
    CHECK(rank(P) == 1); // proportional rows
}

TEST_CASE("kernel basis of simple matrices") {
    RationalMatrix I(3, 3);
    for (std::size_t i = 0; i < 3; ++i) I.set(i, i, 1);
    CHECK(kernel_basis(I).empty());

    RationalMatrix Z(2, 3);
    CHECK(kernel_basis(Z).size() == 3);

    RationalMatrix R(1, 3);
    R.set(0, 0, 1);
    R.set(0, 1, 1);
    auto basis = kernel_basis(R);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(annihilates(R, v));
}

TEST_CASE("rank-nullity, exact annihilation and transpose rank on random matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        RationalMatrix M = random_sparse(rng, rows, cols);
        std::size_t rk = rank(M);
        auto basis = kernel_basis(M);
        CHECK(rk + basis.size() == cols);
        for (const auto& v : basis) CHECK(annihilates(M, v));
        CHECK(rank(M.transpose()) == rk);
    }
}

TEST_CASE("kernel vectors are primitive integer vectors") {
    RationalMatrix M(1, 3);
    M.set(0, 0, Rat(1, 2));
    M.set(0, 2, Rat(3, 5));
    for (const auto& v : kernel_basis(M)) {
        Int g = 0;
        for (const auto& x : v) {
            CHECK(denominator_of(x) == 1);
            g = boost::multiprecision::gcd(g, numerator_of(x));
        }
        CHECK(g == 1);
        CHECK(annihilates(M, v));
    }
}
