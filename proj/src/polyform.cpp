#include "pfaff/polyform.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfaff/exactla.hpp"

namespace pfaff {

namespace {

/// Sorts idx ascending; returns 0 if an index repeats, otherwise the parity
/// sign of the sorting permutation.
int sort_with_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

} // namespace

PolyForm::PolyForm(int n, int r) : n_(n), r_(r) {
    if (n < 0 || r < 0 || r > n + 1) throw std::invalid_argument("PolyForm: bad degree data");
}

PolyForm PolyForm::dz(int n, int i) {
    PolyForm w(n, 1);
    w.add_term({i}, Monomial::one(n + 1), 1);
    return w;
}

PolyForm PolyForm::term(int n, std::vector<int> idx, Monomial mono, Rat c) {
    PolyForm w(n, static_cast<int>(idx.size()));
    w.add_term(std::move(idx), std::move(mono), std::move(c));
    return w;
}

PolyForm PolyForm::scalar(const Polynomial& p) {
    PolyForm w(p.nvars() - 1, 0);
    for (const auto& [m, c] : p.terms()) w.add_term({}, m, c);
    return w;
}

PolyForm PolyForm::volume(int n) {
    PolyForm w(n, n + 1);
    std::vector<int> idx(n + 1);
    for (int i = 0; i <= n; ++i) idx[i] = i;
    w.add_term(std::move(idx), Monomial::one(n + 1), 1);
    return w;
}

void PolyForm::add_term(std::vector<int> idx, Monomial mono, Rat c) {
    if (c == 0) return;
    if (static_cast<int>(idx.size()) != r_) throw std::invalid_argument("PolyForm: wrong index arity");
    if (mono.nvars() != n_ + 1) throw std::invalid_argument("PolyForm: wrong monomial arity");
    for (int i : idx)
        if (i < 0 || i > n_) throw std::invalid_argument("PolyForm: index out of range");
    int sign = sort_with_sign(idx);
    if (sign == 0) return;
    if (sign < 0) c = -c;
    FormKey key{std::move(idx), std::move(mono)};
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
    if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("PolyForm: degree mismatch in sum");
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) { return *this += -o; }

PolyForm PolyForm::operator+(const PolyForm& o) const {
    PolyForm w = *this;
    w += o;
    return w;
}

PolyForm PolyForm::operator-(const PolyForm& o) const {
    PolyForm w = *this;
    w -= o;
    return w;
}

PolyForm PolyForm::operator*(const Rat& c) const {
    PolyForm w(n_, r_);
    if (c == 0) return w;
    for (const auto& [k, v] : terms_) w.terms_.emplace(k, v * c);
    return w;
}

PolyForm PolyForm::operator-() const { return *this * Rat(-1); }

std::optional<int> PolyForm::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.mono.degree();
    for (const auto& [k, c] : terms_)
        if (k.mono.degree() != d) return std::nullopt;
    return d;
}

PolyForm PolyForm::evaluate_coefficients(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != n_ + 1)
        throw std::invalid_argument("PolyForm: point size mismatch");
    PolyForm w(n_, r_);
    for (const auto& [k, c] : terms_) {
        Rat v = c;
        for (int i = 0; i <= n_; ++i)
            for (int e = 0; e < k.mono.exps[i]; ++e) v *= point[i];
        w.add_term(k.idx, Monomial::one(n_ + 1), v);
    }
    return w;
}

Polynomial PolyForm::as_polynomial() const {
    if (r_ != 0) throw std::invalid_argument("PolyForm: not a 0-form");
    Polynomial p(n_ + 1);
    for (const auto& [k, c] : terms_) p.add_term(k.mono, c);
    return p;
}

PolyVectorField::PolyVectorField(int n) : n_(n), comps_(n + 1, Polynomial(n + 1)) {
    if (n < 0) throw std::invalid_argument("PolyVectorField: negative dimension");
}

PolyVectorField::PolyVectorField(int n, std::vector<Polynomial> components)
    : n_(n), comps_(std::move(components)) {
    if (static_cast<int>(comps_.size()) != n + 1)
        throw std::invalid_argument("PolyVectorField: wrong component count");
    for (const auto& p : comps_)
        if (p.nvars() != n + 1)
            throw std::invalid_argument("PolyVectorField: component arity mismatch");
}

PolyVectorField PolyVectorField::term(int n, int i, Monomial mono, Rat c) {
    PolyVectorField X(n);
    X.comps_[i].add_term(std::move(mono), c);
    return X;
}

bool PolyVectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyVectorField PolyVectorField::operator+(const PolyVectorField& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PolyVectorField: dimension mismatch");
    PolyVectorField X(n_);
    for (int i = 0; i <= n_; ++i) X.comps_[i] = comps_[i] + o.comps_[i];
    return X;
}

PolyVectorField PolyVectorField::operator*(const Rat& c) const {
    PolyVectorField X(n_);
    for (int i = 0; i <= n_; ++i) X.comps_[i] = comps_[i] * c;
    return X;
}

std::optional<int> PolyVectorField::homogeneous_degree() const {
    std::optional<int> deg = -1;
    for (const auto& p : comps_) {
        auto d = p.homogeneous_degree();
        if (!d) return std::nullopt;
        if (*d == -1) continue;
        if (*deg != -1 && *deg != *d) return std::nullopt;
        deg = *d;
    }
    return deg;
}

std::vector<Rat> PolyVectorField::evaluate(const std::vector<Rat>& point) const {
    std::vector<Rat> out;
    out.reserve(n_ + 1);
    for (const auto& p : comps_) out.push_back(p.evaluate(point));
    return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.n() != b.n()) throw std::invalid_argument("wedge: ambient dimension mismatch");
    int r = a.r() + b.r();
    // Above top degree the product is identically zero; clamp the arity.
    if (r > a.n() + 1) return PolyForm::zero(a.n(), a.n() + 1);
    PolyForm w(a.n(), r);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<int> idx = ka.idx;
            idx.insert(idx.end(), kb.idx.begin(), kb.idx.end());
            w.add_term(std::move(idx), ka.mono * kb.mono, ca * cb);
        }
    return w;
}

PolyForm interior(const PolyVectorField& X, const PolyForm& w) {
    if (X.n() != w.n()) throw std::invalid_argument("interior: ambient dimension mismatch");
    if (w.r() < 1) throw std::invalid_argument("interior: cannot contract a 0-form");
    PolyForm out(w.n(), w.r() - 1);
    for (const auto& [k, c] : w.terms()) {
        for (std::size_t j = 0; j < k.idx.size(); ++j) {
            const Polynomial& comp = X.component(k.idx[j]);
            if (comp.is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(k.idx.size() - 1);
            for (std::size_t t = 0; t < k.idx.size(); ++t)
                if (t != j) rest.push_back(k.idx[t]);
            Rat sc = (j % 2 == 0) ? c : -c;
            for (const auto& [m, cc] : comp.terms()) out.add_term(rest, k.mono * m, sc * cc);
        }
    }
    return out;
}

PolyForm interior(const std::vector<Rat>& v, const PolyForm& w) {
    PolyVectorField X(w.n());
    for (int i = 0; i <= w.n(); ++i)
        if (v.at(i) != 0) X.component(i).add_term(Monomial::one(w.n() + 1), v[i]);
    return interior(X, w);
}

PolyForm exterior_derivative(const PolyForm& w) {
    if (w.r() + 1 > w.n() + 1) return PolyForm::zero(w.n(), w.n() + 1);
    PolyForm out(w.n(), w.r() + 1);
    for (const auto& [k, c] : w.terms()) {
        for (int i = 0; i <= w.n(); ++i) {
            if (k.mono.exps[i] == 0) continue;
            Monomial dm = k.mono;
            dm.exps[i] -= 1;
            std::vector<int> idx;
            idx.reserve(k.idx.size() + 1);
            idx.push_back(i);
            idx.insert(idx.end(), k.idx.begin(), k.idx.end());
            out.add_term(std::move(idx), std::move(dm), c * k.mono.exps[i]);
        }
    }
    return out;
}

PolyVectorField radial_field(int n) {
    if (n < 1) throw std::invalid_argument("radial_field: n must be >= 1");
    PolyVectorField X(n);
    for (int i = 0; i <= n; ++i) X.component(i).add_term(Monomial::var(n + 1, i), 1);
    return X;
}

bool is_projective_form(const PolyForm& w, int m) {
    if (w.is_zero()) return true;
    auto deg = w.homogeneous_degree();
    if (!deg || *deg != m + 1) return false;
    if (w.r() == 0) return true;
    return interior(radial_field(w.n()), w).is_zero();
}

namespace {

/// Strictly increasing r-tuples from {0..n}, lexicographic order.
std::vector<std::vector<int>> index_tuples(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

std::vector<PolyForm> twisted_form_basis(int n, int r, int m) {
    if (r < 1 || r > n) throw std::invalid_argument("twisted_form_basis: need 1 <= r <= n");
    std::vector<PolyForm> basis;
    if (m + 1 < 0) return basis;

    // Column basis: ambient r-form monomials of coefficient degree m+1,
    // in the canonical term order.
    const auto tuples = index_tuples(n, r);
    const auto monos = monomials_of_degree(n + 1, m + 1);
    std::vector<FormKey> columns;
    for (const auto& I : tuples)
        for (const auto& mo : monos) columns.push_back({I, mo});

    // Row basis of the codomain of i_theta, indexed lazily.
    std::map<FormKey, std::size_t, FormKeyLess> row_index;
    const PolyVectorField theta = radial_field(n);

    std::vector<std::vector<std::pair<FormKey, Rat>>> col_images(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        PolyForm w = PolyForm::term(n, columns[c].idx, columns[c].mono, 1);
        PolyForm img = interior(theta, w);
        for (const auto& [k, v] : img.terms()) {
            row_index.emplace(k, 0);
            col_images[c].emplace_back(k, v);
        }
    }
    std::size_t next = 0;
    for (auto& [k, idx] : row_index) idx = next++;

    exactla::RationalMatrix M(row_index.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [k, v] : col_images[c]) M.set(row_index.at(k), c, v);

    for (const auto& vec : exactla::kernel_basis(M)) {
        PolyForm w(n, r);
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (vec[c] != 0) w.add_term(columns[c].idx, columns[c].mono, vec[c]);
        basis.push_back(std::move(w));
    }
    return basis;
}

} // namespace pfaff
