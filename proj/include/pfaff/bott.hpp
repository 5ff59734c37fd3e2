#ifndef PFAFF_BOTT_HPP
#define PFAFF_BOTT_HPP

#include "pfaff/rational.hpp"

namespace pfaff::bott {

/// C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a. Requires
/// a >= 0; every firing branch of the Bott formulas guarantees this.
Int binomial(const Int& a, const Int& b);

/// dim H^q(P^n, Omega^p(k)). Throws std::out_of_range unless
/// n >= 1, 0 <= p <= n, 0 <= q <= n.
Int h_omega(int n, int q, int p, int k);

/// dim H^s(P^n, Lambda^r T(t)). Throws std::out_of_range unless
/// n >= 1, 0 <= r <= n, 0 <= s <= n.
Int h_tangent(int n, int s, int r, int t);

} // namespace pfaff::bott

#endif
