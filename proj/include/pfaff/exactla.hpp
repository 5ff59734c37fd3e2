#ifndef PFAFF_EXACTLA_HPP
#define PFAFF_EXACTLA_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pfaff/rational.hpp"

namespace pfaff::exactla {

/// Sparse matrix of exact rationals. Zero entries are never stored.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, const Rat& v);
    Rat at(std::size_t r, std::size_t c) const;
    const std::map<std::pair<std::size_t, std::size_t>, Rat>& entries() const { return entries_; }

    RationalMatrix transpose() const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, Rat> entries_;
};

/// Exact rank over Q, by sparse fraction-free elimination.
std::size_t rank(const RationalMatrix& M);

/// Basis of the right null space {v : Mv = 0}. Each vector is an integer
/// vector of length cols with content 1 and positive leading entry;
/// the list has exactly cols - rank(M) elements.
std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& M);

} // namespace pfaff::exactla

#endif
