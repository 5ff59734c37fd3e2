#include "pfaff/counting.hpp"

#include <map>

#include "pfaff/bott.hpp"
#include "pfaff/exactla.hpp"

namespace pfaff::counting {

void PfaffCountQuery::validate() const {
    if (n < 3) throw std::invalid_argument("PfaffCountQuery: n must be >= 3");
    if (d < 1) throw std::invalid_argument("PfaffCountQuery: d must be >= 1");
    if (r < 1 || r > n - 2) throw std::invalid_argument("PfaffCountQuery: need 1 <= r <= n-2");
}

void VfCountQuery::validate() const {
    if (n < 3) throw std::invalid_argument("VfCountQuery: n must be >= 3");
    if (m < 0) throw std::invalid_argument("VfCountQuery: m must be >= 0");
}

namespace {

/// Twist of the l-th step of the Koszul resolution of the degree-d foliation.
int koszul_twist(int l, int d, int m, int r) { return -l * (d - 1) + m + r * d + 1; }

} // namespace

Int pfaff_count(const PfaffCountQuery& q) {
    q.validate();
    Int acc = 0;
    for (int i = 1; i <= q.n - q.r; ++i) {
        Int h = bott::h_omega(q.n, 0, q.r + i, koszul_twist(q.r + i, q.d, q.m, q.r));
        acc += (i % 2 == 1) ? h : -h;
    }
    if (acc < 0) throw std::logic_error("pfaff_count: negative alternating sum");
    return acc;
}

Int pfaff_count_piecewise(const PfaffCountQuery& q) {
    q.validate();
    auto term = [&](int i) -> Int {
        // A term drops as soon as i*d >= m+1 (its h^0 vanishes); evaluating
        // the display there would feed a negative top to a binomial.
        if (i * q.d >= q.m + 1) return 0;
        return bott::binomial(q.m + q.n + 1 - i * q.d, q.m + q.r + i + 1 - i * q.d) *
               bott::binomial(q.m + q.r + i - i * q.d, q.r + i);
    };
    if (q.m + 1 <= q.d) return 0;
    int upper = 0;
    for (int j = 1; j <= q.n - q.r - 2; ++j)
        if (j * q.d < q.m + 1 && q.m + 1 <= (j + 1) * q.d) upper = j;
    if (upper == 0) {
        // (n-r-1)d < m+1 case: the full sum.
        upper = q.n - q.r;
    }
    Int acc = 0;
    for (int i = 1; i <= upper; ++i) acc += (i % 2 == 1) ? term(i) : -term(i);
    return acc;
}

Int vf_count(const VfCountQuery& q) {
    q.validate();
    if (q.in_window()) {
        if (q.even_excluded())
            throw PreconditionViolated("vf_count: d = (n/2)m excluded for n even");
        if (q.odd_excluded())
            throw PreconditionViolated(
                "vf_count: d in {((n-1)/2)m - 1, ((n+1)/2)m + 1} excluded for n odd");
        return bott::binomial(q.d - q.m + q.n, q.d - q.m + q.n - 2) *
               bott::binomial(q.d - q.m + q.n - 3, q.n - 2);
    }
    if (q.d < q.m + 1) {
        if (q.n % 2 == 1 && 2 * q.d == (q.n - 1) * q.m - 2)
            throw PreconditionViolated("vf_count: d = ((n-1)/2)m - 1 not covered below the window");
        return 0;
    }
    throw PreconditionViolated("vf_count: d >= 2(m+1) not covered");
}

PolyVectorField example_field(int n, int d, const std::vector<Rat>& coefficients) {
    if (n % 2 == 0) throw std::invalid_argument("example_field: n must be odd");
    if (d < 1) throw std::invalid_argument("example_field: d must be >= 1");
    if (static_cast<int>(coefficients.size()) != n + 1)
        throw std::invalid_argument("example_field: need n+1 coefficients");
    for (const auto& a : coefficients)
        if (a == 0) throw std::invalid_argument("example_field: zero coefficient");
    PolyVectorField X(n);
    for (int i = 0; i + 1 <= n; i += 2) {
        X.component(i).add_term(Monomial::var(n + 1, i + 1, d), coefficients[i]);
        X.component(i + 1).add_term(Monomial::var(n + 1, i, d), coefficients[i + 1]);
    }
    return X;
}

std::vector<PolyForm> invariant_form_basis(const PolyVectorField& X, int m, int r) {
    const int n = X.n();
    auto d = X.homogeneous_degree();
    if (!d) throw std::invalid_argument("invariant_form_basis: X is not homogeneous");
    if (r < 1 || r > n - 2) throw std::invalid_argument("invariant_form_basis: need 1 <= r <= n-2");

    const std::vector<PolyForm> basis = twisted_form_basis(n, r, m);
    if (basis.empty()) return {};

    std::map<FormKey, std::size_t, FormKeyLess> row_index;
    std::vector<PolyForm> images;
    images.reserve(basis.size());
    for (const auto& w : basis) {
        images.push_back(interior(X, w));
        for (const auto& [k, v] : images.back().terms()) row_index.emplace(k, 0);
    }
    std::size_t next = 0;
    for (auto& [k, idx] : row_index) idx = next++;

    exactla::RationalMatrix M(row_index.size(), basis.size());
    for (std::size_t c = 0; c < images.size(); ++c)
        for (const auto& [k, v] : images[c].terms()) M.set(row_index.at(k), c, v);

    std::vector<PolyForm> out;
    for (const auto& vec : exactla::kernel_basis(M)) {
        PolyForm w(n, r);
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (vec[c] != 0) w += basis[c] * vec[c];
        out.push_back(std::move(w));
    }
    return out;
}

Int oracle_pfaff_count(const PolyVectorField& X, int m, int r) {
    return static_cast<Int>(invariant_form_basis(X, m, r).size());
}

Int oracle_vf_count(const PolyForm& w, int m, int d) {
    const int n = w.n();
    if (w.r() != 1) throw std::invalid_argument("oracle_vf_count: w must be a 1-form");
    if (!is_projective_form(w, m)) throw std::invalid_argument("oracle_vf_count: w is not projective");
    if (d < 0) throw std::invalid_argument("oracle_vf_count: d must be >= 0");

    // Columns: monomial basis of degree-d polynomial vector fields.
    const auto monos = monomials_of_degree(n + 1, d);
    const std::size_t cols = static_cast<std::size_t>(n + 1) * monos.size();

    // Rows: monomials of w(X) = sum_i A_i X_i, of degree m+1+d.
    std::map<Monomial, std::size_t, GradedLex> row_index;
    std::vector<std::map<Monomial, Rat, GradedLex>> col_entries(cols);
    std::size_t c = 0;
    for (int i = 0; i <= n; ++i) {
        // Coefficient A_i of dz_i in w.
        Polynomial Ai(n + 1);
        for (const auto& [k, v] : w.terms())
            if (k.idx[0] == i) Ai.add_term(k.mono, v);
        for (const auto& mo : monos) {
            Polynomial prod = Ai * Polynomial::monomial(mo, 1);
            for (const auto& [m2, v] : prod.terms()) {
                row_index.emplace(m2, 0);
                col_entries[c][m2] = v;
            }
            ++c;
        }
    }
    std::size_t next = 0;
    for (auto& [k, idx] : row_index) idx = next++;

    exactla::RationalMatrix M(row_index.size(), cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [m2, v] : col_entries[j]) M.set(row_index.at(m2), j, v);

    Int kernel_dim = Int(cols) - Int(exactla::rank(M));
    // Radial multiples P*theta, P homogeneous of degree d-1, all lie in the
    // kernel because w(P*theta) = P * i_theta(w) = 0.
    Int radial = bott::binomial(d - 1 + n, n);
    Int out = kernel_dim - radial;
    if (out < 0) throw std::logic_error("oracle_vf_count: kernel smaller than the radial multiples");
    return out;
}

Int oracle_matrix_cols(int n, int r, int m) { return bott::h_omega(n, 0, r, m + r + 1); }

} // namespace pfaff::counting
