#include "pfaff/bott.hpp"

#include <stdexcept>

namespace pfaff::bott {

Int binomial(const Int& a, const Int& b) {
    if (a < 0) throw std::invalid_argument("binomial: negative top");
    if (b < 0 || b > a) return 0;
    Int bb = b;
    if (a - b < bb) bb = a - b;
    Int num = 1, den = 1;
    for (Int i = 0; i < bb; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;
}

Int h_omega(int n, int q, int p, int k) {
    if (n < 1 || p < 0 || p > n || q < 0 || q > n)
        throw std::out_of_range("h_omega: arguments out of range");
    if (q == 0 && k > p) return binomial(k + n - p, k) * binomial(k - 1, p);
    if (k == 0 && p == q) return 1;
    if (q == n && k < p - n) return binomial(-k + p, -k) * binomial(-k - 1, n - p);
    return 0;
}

Int h_tangent(int n, int s, int r, int t) {
    if (n < 1 || r < 0 || r > n || s < 0 || s > n)
        throw std::out_of_range("h_tangent: arguments out of range");
    if (s == 0 && t + r >= 0) return binomial(t + n + r + 1, t + n + 1) * binomial(t + n, n - r);
    if (t == -n - 1 && n - r == s) return 1;
    // First factor is C(-t-r-1, -t-n-1), not C(-t+r-1, ...): the latter breaks
    // Serre duality (e.g. n=1, r=1, t=-4 must give h^1(O(-2)) = 1). Follows
    // from Lambda^r T = Omega^{n-r}(n+1).
    if (s == n && t + n + r + 2 <= 0) return binomial(-t - r - 1, -t - n - 1) * binomial(-t - n - 2, r);
    return 0;
}

} // namespace pfaff::bott
