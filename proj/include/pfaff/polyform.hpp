#ifndef PFAFF_POLYFORM_HPP
#define PFAFF_POLYFORM_HPP

#include <map>
#include <optional>
#include <vector>

#include "pfaff/polynomial.hpp"

namespace pfaff {

/// Key of one term of a polynomial differential form: a strictly increasing
/// index tuple (i_1 < ... < i_r) and a coefficient monomial.
struct FormKey {
    std::vector<int> idx;
    Monomial mono;

    bool operator==(const FormKey&) const = default;
};

/// Canonical term order: lexicographic on the index tuple, then graded-lex on
/// the monomial.
struct FormKeyLess {
    bool operator()(const FormKey& a, const FormKey& b) const {
        if (a.idx != b.idx) return a.idx < b.idx;
        return graded_lex_less(a.mono, b.mono);
    }
};

/// Homogeneous-coordinate polynomial differential r-form on C^{n+1}, with
/// exact rational coefficients. The degree-0 case is a plain polynomial with
/// an empty index tuple.
class PolyForm {
public:
    using TermMap = std::map<FormKey, Rat, FormKeyLess>;

    PolyForm(int n, int r);

    static PolyForm zero(int n, int r) { return PolyForm(n, r); }
    /// dz_{i} as a 1-form.
    static PolyForm dz(int n, int i);
    /// c * z^mono * dz_{i_1} ^ ... ^ dz_{i_r}; idx need not be sorted, the
    /// merge parity sign is applied (repeated indices give zero).
    static PolyForm term(int n, std::vector<int> idx, Monomial mono, Rat c);
    /// Embed a polynomial as a 0-form.
    static PolyForm scalar(const Polynomial& p);
    /// dz_0 ^ dz_1 ^ ... ^ dz_n, the affine volume form.
    static PolyForm volume(int n);

    int n() const { return n_; }
    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Accumulate a term. idx is sorted in place with the sign of the
    /// permutation; duplicate indices contribute nothing.
    void add_term(std::vector<int> idx, Monomial mono, Rat c);

    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator-=(const PolyForm& o);
    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator-(const PolyForm& o) const;
    PolyForm operator*(const Rat& c) const;
    PolyForm operator-() const;

    bool operator==(const PolyForm& o) const {
        return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
    }

    /// Coefficient degree if all monomials agree (zero form: -1 sentinel).
    std::optional<int> homogeneous_degree() const;

    /// The constant-coefficient form obtained by evaluating every coefficient
    /// at the given point of C^{n+1}.
    PolyForm evaluate_coefficients(const std::vector<Rat>& point) const;

    /// View a 0-form as a polynomial.
    Polynomial as_polynomial() const;

private:
    int n_;
    int r_;
    TermMap terms_;
};

/// (n+1)-tuple of polynomials: a polynomial vector field on C^{n+1}.
class PolyVectorField {
public:
    explicit PolyVectorField(int n);
    PolyVectorField(int n, std::vector<Polynomial> components);

    /// c * z^mono * d/dz_i.
    static PolyVectorField term(int n, int i, Monomial mono, Rat c);

    int n() const { return n_; }
    const Polynomial& component(int i) const { return comps_[i]; }
    Polynomial& component(int i) { return comps_[i]; }
    bool is_zero() const;

    PolyVectorField operator+(const PolyVectorField& o) const;
    PolyVectorField operator*(const Rat& c) const;
    bool operator==(const PolyVectorField& o) const = default;

    std::optional<int> homogeneous_degree() const;

    std::vector<Rat> evaluate(const std::vector<Rat>& point) const;

private:
    int n_;
    std::vector<Polynomial> comps_;
};

/// Exterior product. Throws std::invalid_argument on ambient mismatch.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// Contraction i_X w. Slot j of an index tuple contributes sign (-1)^j.
/// Throws on ambient mismatch or contraction of a 0-form.
PolyForm interior(const PolyVectorField& X, const PolyForm& w);

/// Contraction by a constant vector (used for pointwise kernel tests).
PolyForm interior(const std::vector<Rat>& v, const PolyForm& w);

/// Exterior derivative d.
PolyForm exterior_derivative(const PolyForm& w);

/// The radial (Euler) field z_0 d/dz_0 + ... + z_n d/dz_n.
PolyVectorField radial_field(int n);

/// True iff w descends to a twisted form on P^n of Pfaff degree m: the
/// coefficients are homogeneous of degree m+1 and i_theta w = 0.
bool is_projective_form(const PolyForm& w, int m);

/// Basis of the twisted r-forms of degree m on P^n: homogeneous r-forms of
/// coefficient degree m+1 annihilated by the radial field, computed as an
/// exact kernel. Deterministic order; empty when the space is zero.
std::vector<PolyForm> twisted_form_basis(int n, int r, int m);

} // namespace pfaff

#endif
