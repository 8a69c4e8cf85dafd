#include "salkit/matrix_fp.hpp"

#include <stdexcept>

namespace salkit {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

MatrixFp::MatrixFp(int p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {
    if (!is_prime(p_)) throw std::invalid_argument("MatrixFp: modulus must be prime");
}

void MatrixFp::set_from_int(int r, int c, long long v) {
    long long m = v % p;
    if (m < 0) m += p;
    at(r, c) = static_cast<int>(m);
}

MatrixFp MatrixFp::from_int(int p, const std::vector<std::vector<long long>>& rows_in) {
    MatrixFp m(p, static_cast<int>(rows_in.size()),
               rows_in.empty() ? 0 : static_cast<int>(rows_in[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            m.set_from_int(r, c, rows_in[r][c]);
    return m;
}

MatrixFp MatrixFp::transposed() const {
    MatrixFp t(p, cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

bool MatrixFp::is_zero() const {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

int fp_inv(int x, int p) {
    // extended Euclid
    int a = x % p, b = p, u = 1, v = 0;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("fp_inv of zero");
    while (a != 0) {
        int q = b / a;
        b -= q * a; std::swap(a, b);
        v -= q * u; std::swap(u, v);
    }
    int inv = v % p;
    if (inv < 0) inv += p;
    return inv;
}

namespace {

// In-place row echelon; returns pivot columns. Fully reduced when 'reduce'.
std::vector<int> fp_echelon(MatrixFp& m, bool reduce) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m.at(piv, c), m.at(row, c));
        int inv = fp_inv(m.at(row, col), m.p);
        for (int c = col; c < m.cols; ++c)
            m.at(row, c) = static_cast<int>(static_cast<long long>(m.at(row, c)) * inv % m.p);
        int rbegin = reduce ? 0 : row + 1;
        for (int r = rbegin; r < m.rows; ++r) {
            if (r == row) continue;
            int f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols; ++c) {
                long long v = m.at(r, c) - static_cast<long long>(f) * m.at(row, c) % m.p;
                v %= m.p;
                if (v < 0) v += m.p;
                m.at(r, c) = static_cast<int>(v);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int fp_rank(MatrixFp m) { return static_cast<int>(fp_echelon(m, false).size()); }

std::vector<std::vector<int>> fp_nullspace_basis(const MatrixFp& m_in) {
    MatrixFp m = m_in;
    std::vector<int> pivots = fp_echelon(m, true);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<int>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<int> v(m.cols, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            int x = m.at(static_cast<int>(i), free_col);
            v[pivots[i]] = x == 0 ? 0 : m.p - x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

MatrixFp fp_mul(const MatrixFp& a, const MatrixFp& b) {
    if (a.cols != b.rows || a.p != b.p) throw std::invalid_argument("fp_mul: shape/modulus mismatch");
    MatrixFp c(a.p, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                long long v = c.at(i, j) + static_cast<long long>(aik) * b.at(k, j);
                c.at(i, j) = static_cast<int>(v % a.p);
            }
        }
    return c;
}

std::vector<int> fp_mat_vec(const MatrixFp& a, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != a.cols) throw std::invalid_argument("fp_mat_vec: size mismatch");
    std::vector<int> out(a.rows, 0);
    for (int i = 0; i < a.rows; ++i) {
        long long acc = 0;
        for (int j = 0; j < a.cols; ++j)
            acc += static_cast<long long>(a.at(i, j)) * v[j] % a.p;
        out[i] = static_cast<int>(acc % a.p);
    }
    return out;
}

bool fp_solve(const MatrixFp& a, const std::vector<int>& b, std::vector<int>& x_out) {
    if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("fp_solve: size mismatch");
    MatrixFp aug(a.p, a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = ((b[r] % a.p) + a.p) % a.p;
    }
    std::vector<int> pivots = fp_echelon(aug, true);
    x_out.assign(a.cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols) return false; // pivot in rhs column: inconsistent
        x_out[pivots[i]] = aug.at(static_cast<int>(i), a.cols);
    }
    return true;
}

bool fp_in_column_span(const MatrixFp& a, const std::vector<int>& v) {
    std::vector<int> x;
    return fp_solve(a, v, x);
}

long long fp_lift(int x, int p) {
    int m = ((x % p) + p) % p;
    return m > p / 2 ? m - p : m;
}

} // namespace salkit
