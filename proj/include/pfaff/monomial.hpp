#ifndef PFAFF_MONOMIAL_HPP
#define PFAFF_MONOMIAL_HPP

#include <compare>
#include <numeric>
#include <vector>

namespace pfaff {

/// Exponent vector in the homogeneous coordinates z_0,..,z_n.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(int nvars, int i, int power = 1) {
        Monomial m = one(nvars);
        m.exps[i] = power;
        return m;
    }

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    Monomial operator*(const Monomial& o) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += o.exps[i];
        return m;
    }

    bool operator==(const Monomial& o) const = default;
};

/// Graded-lex: compare total degree first, then exponents lexicographically.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(a, b); }
};

/// All monomials of the given total degree in nvars variables, graded-lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

} // namespace pfaff

#endif
