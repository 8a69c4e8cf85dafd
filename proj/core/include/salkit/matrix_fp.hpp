#pragma once

#include <cstdint>
#include <vector>

namespace salkit {

bool is_prime(int p);

// Dense matrix over F_p, p a small prime. Entries are residues in [0, p).
struct MatrixFp {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    MatrixFp() = default;
    MatrixFp(int p_, int r, int c);

    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    void set_from_int(int r, int c, long long v);
    static MatrixFp from_int(int p, const std::vector<std::vector<long long>>& rows_in);
    MatrixFp transposed() const;
    bool is_zero() const;
};

int fp_inv(int x, int p);

// Plain dense Gaussian elimination; matrices here stay small.
int fp_rank(MatrixFp m);

std::vector<std::vector<int>> fp_nullspace_basis(const MatrixFp& m);

MatrixFp fp_mul(const MatrixFp& a, const MatrixFp& b);

std::vector<int> fp_mat_vec(const MatrixFp& a, const std::vector<int>& v);

// Solves a x = b; empty result if inconsistent.
bool fp_solve(const MatrixFp& a, const std::vector<int>& b, std::vector<int>& x_out);

// True iff v lies in the column span of a.
bool fp_in_column_span(const MatrixFp& a, const std::vector<int>& v);

// Symmetric lift of a residue to (-p/2, p/2].
long long fp_lift(int x, int p);

} // namespace salkit
