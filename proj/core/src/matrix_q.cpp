#include "salkit/matrix_q.hpp"

namespace salkit {

MatrixQ MatrixQ::from_int_rows(const std::vector<std::vector<long long>>& rows_in) {
    MatrixQ m(static_cast<int>(rows_in.size()),
              rows_in.empty() ? 0 : static_cast<int>(rows_in[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            m.at(r, c) = rows_in[r][c];
    return m;
}

std::vector<int> rref_q(MatrixQ& m) {
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
        Rational inv = m.at(row, col);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank_q(MatrixQ m) { return static_cast<int>(rref_q(m).size()); }

std::vector<std::vector<Rational>> nullspace_q(const MatrixQ& m_in) {
    MatrixQ m = m_in;
    std::vector<int> pivots = rref_q(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m.at(static_cast<int>(i), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace salkit
