#pragma once

// Exact dense Gaussian elimination, generic over the field adapters in
// fields.hpp (and the cyclotomic field).  Row-major matrices as nested
// vectors; sizes here are desk scale, pivoting is "first nonzero in column"
// to keep every run reproducible.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ivhs {

template <class Field>
using Matrix = std::vector<std::vector<typename Field::Element>>;

template <class Field>
std::size_t field_rank(const Field& K, Matrix<Field> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && K.is_zero(a[pivot][c])) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        auto inv = K.inv(a[rank][c]);
        for (std::size_t cc = c; cc < cols; ++cc) a[rank][cc] = K.mul(a[rank][cc], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || K.is_zero(a[r][c])) continue;
            auto f = a[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                a[r][cc] = K.sub(a[r][cc], K.mul(f, a[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

template <class Field>
struct NullspaceSolution {
    std::size_t rank = 0;
    std::vector<typename Field::Element> solution;  // empty when only x = 0 solves
    std::size_t free_column = 0;                    // the pivoted free column, if any
};

/// Reduced row echelon form in place; returns pivot column per row.
template <class Field>
std::vector<std::size_t> field_rref(const Field& K, Matrix<Field>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && K.is_zero(a[pivot][c])) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        auto inv = K.inv(a[rank][c]);
        for (std::size_t cc = c; cc < cols; ++cc) a[rank][cc] = K.mul(a[rank][cc], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || K.is_zero(a[r][c])) continue;
            auto f = a[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                a[r][cc] = K.sub(a[r][cc], K.mul(f, a[rank][cc]));
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

/// One deterministic nonzero solution of A x = 0: the first non-pivot column
/// gets value 1, all other free columns 0, pivots back-substituted.  Empty
/// solution when the kernel is trivial.
template <class Field>
NullspaceSolution<Field> first_nullspace_vector(const Field& K, Matrix<Field> a) {
    NullspaceSolution<Field> out;
    if (a.empty()) return out;
    const std::size_t cols = a[0].size();
    std::vector<std::size_t> pivots = field_rref(K, a);
    out.rank = pivots.size();
    if (out.rank == cols) return out;  // trivial kernel

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    out.free_column = free_col;

    out.solution.assign(cols, K.zero());
    out.solution[free_col] = K.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out.solution[pivots[r]] = K.neg(a[r][free_col]);
    return out;
}

}  // namespace ivhs
