#pragma once

#include <vector>

#include "salkit/rational.hpp"

namespace salkit {

// Dense rational matrix, row-major.
struct MatrixQ {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    MatrixQ() = default;
    MatrixQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static MatrixQ from_int_rows(const std::vector<std::vector<long long>>& rows_in);
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref_q(MatrixQ& m);

int rank_q(MatrixQ m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace_q(const MatrixQ& m);

} // namespace salkit
