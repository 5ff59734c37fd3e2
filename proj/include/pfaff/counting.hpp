#ifndef PFAFF_COUNTING_HPP
#define PFAFF_COUNTING_HPP

#include <stdexcept>
#include <vector>

#include "pfaff/polyform.hpp"
#include "pfaff/rational.hpp"

namespace pfaff::counting {

/// Raised when a counting formula is queried outside the parameter range
/// where it asserts anything.
struct PreconditionViolated : std::domain_error {
    using std::domain_error::domain_error;
};

struct PfaffCountQuery {
    int n; ///< ambient projective dimension, >= 3
    int d; ///< degree of the one-dimensional foliation, >= 1
    int m; ///< degree of the twisted form
    int r; ///< form degree, 1 <= r <= n-2

    void validate() const;
};

struct VfCountQuery {
    int n; ///< ambient projective dimension, >= 3
    int m; ///< degree of the codimension-one distribution, >= 0
    int d; ///< vector field degree

    void validate() const;

    bool in_window() const { return m + 1 <= d && d < 2 * (m + 1); }
    bool even_excluded() const { return n % 2 == 0 && 2 * d == n * m; }
    bool odd_excluded() const {
        return n % 2 == 1 && (2 * d == (n - 1) * m - 2 || 2 * d == (n + 1) * m + 2);
    }
};

/// Number of independent degree-m twisted r-forms invariant under a generic
/// degree-d one-dimensional foliation with isolated singularities, as the
/// alternating sum of h^0 terms along the Koszul resolution.
Int pfaff_count(const PfaffCountQuery& q);

/// Literal transcription of the three-case piecewise display of the same
/// count; kept only as a cross-check against pfaff_count.
Int pfaff_count_piecewise(const PfaffCountQuery& q);

/// Number of independent degree-d vector fields tangent to a generic
/// codimension-one degree-m distribution with isolated singularities.
/// Throws PreconditionViolated where the formula asserts nothing.
Int vf_count(const VfCountQuery& q);

/// The coupled monomial field a_0 z_1^d d/dz_0 + a_1 z_0^d d/dz_1 + ...,
/// pairing coordinates (z_0,z_1), (z_2,z_3), ... Requires n odd, d >= 1 and
/// n+1 nonzero coefficients; its singularities are isolated.
PolyVectorField example_field(int n, int d, const std::vector<Rat>& coefficients);

/// Exact basis of the twisted r-forms of degree m annihilated by X, computed
/// as the kernel of the contraction matrix on twisted_form_basis(n, r, m).
/// Requires X homogeneous and 1 <= r <= n-2.
std::vector<PolyForm> invariant_form_basis(const PolyVectorField& X, int m, int r);

/// Kernel dimension of omega -> i_X omega on the twisted r-forms of degree m.
/// Equals pfaff_count when X has isolated singularities.
Int oracle_pfaff_count(const PolyVectorField& X, int m, int r);

/// Kernel dimension of X -> w(X) on homogeneous degree-d vector fields, minus
/// the C(d-1+n, n) radial multiples P*theta that always lie in the kernel.
/// Requires is_projective_form(w, m).
Int oracle_vf_count(const PolyForm& w, int m, int d);

/// Columns of the matrix oracle_pfaff_count would build, without building it.
Int oracle_matrix_cols(int n, int r, int m);

} // namespace pfaff::counting

#endif
