#include "pfaff/exactla.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pfaff::exactla {

void RationalMatrix::set(std::size_t r, std::size_t c, const Rat& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::set: index out of range");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

Rat RationalMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::at: index out of range");
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rat(0) : it->second;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix T(cols_, rows_);
    for (const auto& [rc, v] : entries_) T.set(rc.second, rc.first, v);
    return T;
}

std::vector<Rat> RationalMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: size mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (const auto& [rc, val] : entries_) out[rc.first] += val * v[rc.second];
    return out;
}

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

using SparseRow = std::map<std::size_t, Int>;

/// Sparse fraction-free elimination state. Rows are integer with content 1
/// after each update; pivoting favors the shortest column, so disjoint blocks
/// never interact.
struct Elimination {
    std::size_t cols = 0;
    std::vector<SparseRow> rows;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col), selection order

    std::vector<char> pivot_col;
};

void reduce_content(SparseRow& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = gcd(g, v);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

Elimination eliminate(const RationalMatrix& M) {
    Elimination e;
    e.cols = M.cols();
    e.rows.assign(M.rows(), {});
    for (const auto& [rc, v] : M.entries()) e.rows[rc.first][rc.second] = 0; // placeholder

    // Clear denominators row by row.
    std::vector<Int> scale(M.rows(), 1);
    for (const auto& [rc, v] : M.entries()) scale[rc.first] = lcm(scale[rc.first], denominator_of(v));
    for (const auto& [rc, v] : M.entries())
        e.rows[rc.first][rc.second] = numerator_of(v) * (scale[rc.first] / denominator_of(v));
    for (auto& row : e.rows) reduce_content(row);

    // Active rows indexed per column.
    std::vector<std::vector<std::size_t>> col_rows(e.cols);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
        for (const auto& [c, v] : e.rows[r]) col_rows[c].push_back(r);
    std::vector<char> active(e.rows.size(), 1);

    auto live_count = [&](std::size_t c) {
        auto& lst = col_rows[c];
        std::erase_if(lst, [&](std::size_t r) { return !active[r] || !e.rows[r].count(c); });
        return lst.size();
    };

    e.pivot_col.assign(e.cols, 0);
    for (;;) {
        // Shortest-column pivot, ties to the leftmost column.
        std::size_t best_col = e.cols;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t c = 0; c < e.cols; ++c) {
            if (e.pivot_col[c]) continue;
            std::size_t cnt = live_count(c);
            if (cnt > 0 && cnt < best) {
                best = cnt;
                best_col = c;
            }
        }
        if (best_col == e.cols) break;

        std::size_t pr = col_rows[best_col].front();
        for (std::size_t r : col_rows[best_col])
            if (e.rows[r].size() < e.rows[pr].size()) pr = r;

        active[pr] = 0;
        e.pivot_col[best_col] = 1;
        e.pivots.emplace_back(pr, best_col);
        const Int pv = e.rows[pr].at(best_col);

        std::vector<std::size_t> affected = col_rows[best_col];
        for (std::size_t r : affected) {
            if (r == pr || !active[r]) continue;
            auto fit = e.rows[r].find(best_col);
            if (fit == e.rows[r].end()) continue; // stale or duplicate index entry
            const Int f = fit->second;
            SparseRow nr;
            for (const auto& [c, v] : e.rows[r]) {
                if (c == best_col) continue;
                nr[c] = v * pv;
            }
            for (const auto& [c, v] : e.rows[pr]) {
                if (c == best_col) continue;
                auto it = nr.find(c);
                if (it == nr.end()) {
                    Int x = -f * v;
                    if (x != 0) nr.emplace(c, std::move(x));
                } else {
                    it->second -= f * v;
                    if (it->second == 0) nr.erase(it);
                }
            }
            reduce_content(nr);
            for (const auto& [c, v] : nr)
                if (!e.rows[r].count(c)) col_rows[c].push_back(r);
            e.rows[r] = std::move(nr);
        }
    }
    return e;
}

void normalize_integer_vector(std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, denominator_of(x));
    Int g = 0;
    std::vector<Int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator_of(v[i]) * (l / denominator_of(v[i]));
        g = gcd(g, w[i]);
    }
    if (g == 0) return;
    int sign = 1;
    for (const auto& x : w)
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(w[i] * sign) / g;
}

} // namespace

std::size_t rank(const RationalMatrix& M) { return eliminate(M).pivots.size(); }

std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& M) {
    Elimination e = eliminate(M);
    std::vector<std::vector<Rat>> basis;

    for (std::size_t f = 0; f < e.cols; ++f) {
        if (e.pivot_col[f]) continue;
        std::vector<Rat> v(e.cols, Rat(0));
        v[f] = 1;
        // Each pivot row only involves columns still active at its selection
        // step, so reverse selection order is a valid back substitution.
        for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
            const auto& [pr, pc] = *it;
            Rat s = 0;
            for (const auto& [c, val] : e.rows[pr]) {
                if (c == pc) continue;
                if (v[c] != 0) s += Rat(val) * v[c];
            }
            v[pc] = -s / Rat(e.rows[pr].at(pc));
        }
        normalize_integer_vector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace pfaff::exactla
