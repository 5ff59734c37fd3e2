#ifndef PFAFF_FLAGS_HPP
#define PFAFF_FLAGS_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfaff/polyform.hpp"

namespace pfaff::flags {

/// Abstract degree data (n, codimension, degree) of a Pfaff system; the twist
/// of the inducing section is l = m + k + 1.
struct PfaffDescriptor {
    int n;
    int codim;
    int degree;

    int twist() const { return degree + codim + 1; }
};

/// Raised by the pointwise checks when the sampled point lies in a singular
/// set; says which leg vanished.
struct SingularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact symbolic flag test for a vector field against a form: i_X w = 0.
bool check_vf_form_flag(const PolyVectorField& X, const PolyForm& w);

/// Pointwise flag test between two forms at a rational point p outside both
/// singular sets: Ker(w1(p)) contained in Ker(w2(p)), via an exact kernel
/// basis of the contraction v -> i_v w1(p). Throws SingularPoint if either
/// form vanishes at p.
bool check_kernel_containment_at_point(const PolyForm& w1, const PolyForm& w2,
                                       const std::vector<Rat>& p);

/// Pointwise membership X(p) in Ker(w(p)); throws SingularPoint on w(p) = 0
/// or X(p) = 0.
bool check_vf_kernel_membership_at_point(const PolyVectorField& X, const PolyForm& w,
                                         const std::vector<Rat>& p);

/// Frobenius condition w ^ dw = 0 for a 1-form.
bool check_integrability_codim1(const PolyForm& w);

/// Decomposability test w ^ w = 0 for a 2-form.
bool check_decomposable_2form(const PolyForm& w);

/// The coupled pair on P^3: X = a_0 z_1^d d/dz_0 + a_1 z_0^d d/dz_1 +
/// a_2 z_3^d d/dz_2 + a_3 z_2^d d/dz_3 and w = F dG - G dF with
/// F = a_1 z_0^{d+1} - a_0 z_1^{d+1}, G = a_3 z_2^{d+1} - a_2 z_3^{d+1}.
/// deg X = d, deg w = 2d and i_X w = 0.
std::pair<PolyVectorField, PolyForm> example_5_1(int d, const std::vector<Rat>& a);

/// Pfaff degree of a projective form: coefficient degree minus one.
/// Throws on non-homogeneous input.
int degree_of_pfaff(const PolyForm& w);

/// Rejection-sample a rational point with coordinates in {-5,..,5} outside
/// the singular sets of every listed form/field; at most 1000 attempts,
/// then throws SingularPoint.
std::vector<Rat> sample_regular_point(int n, const std::vector<const PolyForm*>& forms,
                                      const std::vector<const PolyVectorField*>& fields,
                                      std::uint64_t& state);

/// Sampled form-to-form flag check: containment at `points` seeded regular
/// points. A single failure refutes the flag; all-pass is consistency, not
/// proof.
bool check_flag_sampled(const PolyForm& w1, const PolyForm& w2, std::uint64_t seed,
                        int points = 20);

} // namespace pfaff::flags

#endif
