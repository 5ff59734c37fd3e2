#ifndef PFAFF_POLYNOMIAL_HPP
#define PFAFF_POLYNOMIAL_HPP

#include <map>
#include <optional>

#include "pfaff/monomial.hpp"
#include "pfaff/rational.hpp"

namespace pfaff {

/// Sparse polynomial with exact rational coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, GradedLex>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial monomial(Monomial m, Rat c) {
        Polynomial p(m.nvars());
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Monomial m, const Rat& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// d/dz_i, term by term.
    Polynomial derivative(int i) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    /// Total degree of every term if they all agree; nullopt otherwise.
    /// The zero polynomial is homogeneous of every degree (returns -1 sentinel).
    std::optional<int> homogeneous_degree() const;

private:
    int nvars_;
    TermMap terms_;
};

} // namespace pfaff

#endif
