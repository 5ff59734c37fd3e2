#include "pfaff/monomial.hpp"

#include <algorithm>

namespace pfaff {

namespace {

void enumerate(int nvars, int pos, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate(nvars, pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0 || nvars <= 0) return out;
    std::vector<int> cur(nvars, 0);
    enumerate(nvars, 0, degree, cur, out);
    // enumerate emits exponents in decreasing lex on the first variable;
    // flip to the canonical graded-lex order.
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return graded_lex_less(a, b); });
    return out;
}

} // namespace pfaff
