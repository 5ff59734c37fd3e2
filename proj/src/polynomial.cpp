#include "pfaff/polynomial.hpp"

#include <stdexcept>

namespace pfaff {

void Polynomial::add_term(Monomial m, const Rat& c) {
    if (c == 0) return;
    if (m.nvars() != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p = *this;
    p += o;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial p = *this;
    p -= o;
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial p(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial p(nvars_);
    if (c == 0) return p;
    for (const auto& [m, v] : terms_) p.add_term(m, v * c);
    return p;
}

Polynomial Polynomial::operator-() const { return *this * Rat(-1); }

Polynomial Polynomial::derivative(int i) const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[i] == 0) continue;
        Monomial dm = m;
        dm.exps[i] -= 1;
        p.add_term(std::move(dm), c * m.exps[i]);
    }
    return p;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("Polynomial::evaluate: point size mismatch");
    Rat acc = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m.exps[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

} // namespace pfaff
