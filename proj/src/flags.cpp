#include "pfaff/flags.hpp"

#include <algorithm>

#include "pfaff/exactla.hpp"

namespace pfaff::flags {

bool check_vf_form_flag(const PolyVectorField& X, const PolyForm& w) {
    return interior(X, w).is_zero();
}

namespace {

/// Kernel of a constant-coefficient r-form: vectors v with i_v w = 0,
/// as the null space of the contraction matrix indexed by (r-1)-tuples.
std::vector<std::vector<Rat>> constant_form_kernel(const PolyForm& w) {
    const int n = w.n();
    std::map<FormKey, std::size_t, FormKeyLess> row_index;
    std::vector<std::vector<std::pair<FormKey, Rat>>> col_entries(n + 1);
    for (int j = 0; j <= n; ++j) {
        std::vector<Rat> ej(n + 1, Rat(0));
        ej[j] = 1;
        PolyForm img = interior(ej, w);
        for (const auto& [k, v] : img.terms()) {
            row_index.emplace(k, 0);
            col_entries[j].emplace_back(k, v);
        }
    }
    std::size_t next = 0;
    for (auto& [k, idx] : row_index) idx = next++;
    exactla::RationalMatrix M(row_index.size(), n + 1);
    for (int j = 0; j <= n; ++j)
        for (const auto& [k, v] : col_entries[j]) M.set(row_index.at(k), j, v);
    return exactla::kernel_basis(M);
}

} // namespace

bool check_kernel_containment_at_point(const PolyForm& w1, const PolyForm& w2,
                                       const std::vector<Rat>& p) {
    if (w1.n() != w2.n())
        throw std::invalid_argument("check_kernel_containment_at_point: dimension mismatch");
    PolyForm a = w1.evaluate_coefficients(p);
    PolyForm b = w2.evaluate_coefficients(p);
    if (a.is_zero()) throw SingularPoint("point lies in the singular set of the first form");
    if (b.is_zero()) throw SingularPoint("point lies in the singular set of the second form");
    for (const auto& v : constant_form_kernel(a))
        if (!interior(v, b).is_zero()) return false;
    return true;
}

bool check_vf_kernel_membership_at_point(const PolyVectorField& X, const PolyForm& w,
                                         const std::vector<Rat>& p) {
    if (X.n() != w.n())
        throw std::invalid_argument("check_vf_kernel_membership_at_point: dimension mismatch");
    PolyForm wp = w.evaluate_coefficients(p);
    if (wp.is_zero()) throw SingularPoint("point lies in the singular set of the form");
    std::vector<Rat> Xp = X.evaluate(p);
    if (std::all_of(Xp.begin(), Xp.end(), [](const Rat& x) { return x == 0; }))
        throw SingularPoint("point lies in the singular set of the field");
    return interior(Xp, wp).is_zero();
}

bool check_integrability_codim1(const PolyForm& w) {
    if (w.r() != 1) throw std::invalid_argument("check_integrability_codim1: w must be a 1-form");
    return wedge(w, exterior_derivative(w)).is_zero();
}

bool check_decomposable_2form(const PolyForm& w) {
    if (w.r() != 2) throw std::invalid_argument("check_decomposable_2form: w must be a 2-form");
    return wedge(w, w).is_zero();
}

std::pair<PolyVectorField, PolyForm> example_5_1(int d, const std::vector<Rat>& a) {
    if (d < 1) throw std::invalid_argument("example_5_1: d must be >= 1");
    if (a.size() != 4) throw std::invalid_argument("example_5_1: need 4 coefficients");
    for (const auto& x : a)
        if (x == 0) throw std::invalid_argument("example_5_1: zero coefficient");

    const int n = 3;
    PolyVectorField X(n);
    X.component(0).add_term(Monomial::var(4, 1, d), a[0]);
    X.component(1).add_term(Monomial::var(4, 0, d), a[1]);
    X.component(2).add_term(Monomial::var(4, 3, d), a[2]);
    X.component(3).add_term(Monomial::var(4, 2, d), a[3]);

    Polynomial F(4), G(4);
    F.add_term(Monomial::var(4, 0, d + 1), a[1]);
    F.add_term(Monomial::var(4, 1, d + 1), -a[0]);
    G.add_term(Monomial::var(4, 2, d + 1), a[3]);
    G.add_term(Monomial::var(4, 3, d + 1), -a[2]);

    PolyForm w(n, 1);
    for (int i = 0; i <= n; ++i) {
        Polynomial coef = F * G.derivative(i) - G * F.derivative(i);
        for (const auto& [m, c] : coef.terms()) w.add_term({i}, m, c);
    }
    return {std::move(X), std::move(w)};
}

int degree_of_pfaff(const PolyForm& w) {
    auto deg = w.homogeneous_degree();
    if (!deg) throw std::invalid_argument("degree_of_pfaff: non-homogeneous form");
    return *deg - 1;
}

namespace {

// xorshift64*; tiny, deterministic across platforms.
std::uint64_t next_u64(std::uint64_t& state) {
    std::uint64_t x = state;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state = x;
    return x * 0x2545F4914F6CDD1DULL;
}

} // namespace

std::vector<Rat> sample_regular_point(int n, const std::vector<const PolyForm*>& forms,
                                      const std::vector<const PolyVectorField*>& fields,
                                      std::uint64_t& state) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rat> p(n + 1);
        for (int i = 0; i <= n; ++i) p[i] = Rat(static_cast<int>(next_u64(state) % 11) - 5);
        bool ok = true;
        for (const PolyForm* w : forms)
            if (w->evaluate_coefficients(p).is_zero()) {
                ok = false;
                break;
            }
        if (ok)
            for (const PolyVectorField* X : fields) {
                std::vector<Rat> Xp = X->evaluate(p);
                if (std::all_of(Xp.begin(), Xp.end(), [](const Rat& x) { return x == 0; })) {
                    ok = false;
                    break;
                }
            }
        if (ok) return p;
    }
    throw SingularPoint("sample_regular_point: no regular point found in 1000 attempts");
}

bool check_flag_sampled(const PolyForm& w1, const PolyForm& w2, std::uint64_t seed, int points) {
    std::uint64_t state = seed ^ 0x9E3779B97F4A7C15ULL;
    if (state == 0) state = 1;
    for (int i = 0; i < points; ++i) {
        std::vector<Rat> p = sample_regular_point(w1.n(), {&w1, &w2}, {}, state);
        if (!check_kernel_containment_at_point(w1, w2, p)) return false;
    }
    return true;
}

} // namespace pfaff::flags
