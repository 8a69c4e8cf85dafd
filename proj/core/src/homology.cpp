#include "salkit/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace salkit {

long long ChainComplexFp::euler_characteristic() const {
    long long chi = 0;
    for (size_t d = 0; d < dims.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * dims[d];
    return chi;
}

void ChainComplexFp::validate() const {
    for (int k = 1; k <= top_dim(); ++k) {
        if (boundary[k].rows != dims[k - 1] || boundary[k].cols != dims[k])
            throw std::invalid_argument("ChainComplexFp: boundary shape mismatch");
        if (k >= 2 && !fp_mul(boundary[k - 1], boundary[k]).is_zero())
            throw std::invalid_argument("ChainComplexFp: d o d != 0");
    }
}

ChainComplexFp complex_from_quotient(const TwistedQuotientComplex& q) {
    ChainComplexFp c;
    c.p = q.p;
    c.dims.resize(q.top_dim + 1);
    for (int d = 0; d <= q.top_dim; ++d) c.dims[d] = static_cast<int>(q.gens[d].size());
    c.boundary.assign(q.top_dim + 1, MatrixFp(q.p, 0, 0));
    for (int d = 1; d <= q.top_dim; ++d) c.boundary[d] = q.boundary[d];
    c.labels = q.labels;
    return c;
}

ChainComplexFp complex_from_cw(const CWData& cw, int p) {
    ChainComplexFp c;
    c.p = p;
    c.dims.resize(cw.top_dim + 1);
    c.labels.resize(cw.top_dim + 1);
    std::vector<int> pos(cw.cells.size(), -1);
    for (int d = 0; d <= cw.top_dim; ++d) {
        c.dims[d] = cw.count_of_dim(d);
        for (size_t i = 0; i < cw.cells_by_dim[d].size(); ++i) {
            pos[cw.cells_by_dim[d][i]] = static_cast<int>(i);
            c.labels[d].push_back(to_string(cw.cells[cw.cells_by_dim[d][i]].cov,
                                            cw.fl.arr.separator_index()));
        }
    }
    c.boundary.assign(cw.top_dim + 1, MatrixFp(p, 0, 0));
    for (int d = 1; d <= cw.top_dim; ++d) {
        MatrixFp m(p, c.dims[d - 1], c.dims[d]);
        for (size_t j = 0; j < cw.cells_by_dim[d].size(); ++j)
            for (const auto& [f, inc] : cw.boundary[cw.cells_by_dim[d][j]])
                m.set_from_int(pos[f], static_cast<int>(j), inc);
        c.boundary[d] = std::move(m);
    }
    return c;
}

namespace {

// Columns of 'vectors' assembled into a matrix.
MatrixFp columns_matrix(int p, int nrows, const std::vector<std::vector<int>>& vectors) {
    MatrixFp m(p, nrows, static_cast<int>(vectors.size()));
    for (size_t j = 0; j < vectors.size(); ++j)
        for (int r = 0; r < nrows; ++r)
            m.at(r, static_cast<int>(j)) = vectors[j][r];
    return m;
}

std::vector<std::vector<int>> cycle_basis(const ChainComplexFp& c, int k) {
    if (k == 0) {
        std::vector<std::vector<int>> basis;
        for (int i = 0; i < c.dims[0]; ++i) {
            std::vector<int> e(c.dims[0], 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    return fp_nullspace_basis(c.boundary[k]);
}

} // namespace

HomologySummary homology_fp(const ChainComplexFp& c) {
    c.validate();
    HomologySummary h;
    const int top = c.top_dim();
    h.betti.resize(top + 1);
    h.representatives.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        std::vector<std::vector<int>> cycles = cycle_basis(c, k);
        int rank_next = k + 1 <= top ? fp_rank(c.boundary[k + 1]) : 0;
        h.betti[k] = static_cast<int>(cycles.size()) - rank_next;

        // Greedy: keep the first cycle-basis vectors independent of the
        // boundary image.
        std::vector<std::vector<int>> chosen;
        if (h.betti[k] > 0) {
            MatrixFp img = k + 1 <= top ? c.boundary[k + 1] : MatrixFp(c.p, c.dims[k], 0);
            int base_rank = fp_rank(img);
            std::vector<std::vector<int>> pool; // columns of img then chosen cycles
            for (int j = 0; j < img.cols; ++j) {
                std::vector<int> col(img.rows);
                for (int r = 0; r < img.rows; ++r) col[r] = img.at(r, j);
                pool.push_back(std::move(col));
            }
            int rank = base_rank;
            for (const auto& z : cycles) {
                if (static_cast<int>(chosen.size()) == h.betti[k]) break;
                pool.push_back(z);
                int r2 = fp_rank(columns_matrix(c.p, c.dims[k], pool));
                if (r2 > rank) {
                    rank = r2;
                    chosen.push_back(z);
                } else {
                    pool.pop_back();
                }
            }
            if (static_cast<int>(chosen.size()) != h.betti[k])
                throw std::logic_error("homology_fp: representative selection failed");
        }
        h.representatives[k] = std::move(chosen);
    }
    return h;
}

void ChainMapFp::validate() const {
    if (source.p != target.p) throw std::invalid_argument("ChainMapFp: modulus mismatch");
    const int top = std::min(source.top_dim(), target.top_dim());
    for (int k = 0; k <= source.top_dim(); ++k) {
        const MatrixFp& fk = f[k];
        int tdim = k <= target.top_dim() ? target.dims[k] : 0;
        if (fk.rows != tdim || fk.cols != source.dims[k])
            throw std::invalid_argument("ChainMapFp: shape mismatch");
    }
    for (int k = 1; k <= top; ++k) {
        MatrixFp lhs = fp_mul(target.boundary[k], f[k]);
        MatrixFp rhs = fp_mul(f[k - 1], source.boundary[k]);
        if (!(lhs.a == rhs.a && lhs.rows == rhs.rows && lhs.cols == rhs.cols))
            throw std::logic_error("ChainMapFp: map does not commute with boundaries");
    }
}

bool ChainMapFp::surjective_in_degree(int k) const {
    return fp_rank(f[k]) == target.dims[k];
}

CellularRestriction cellular_restriction(const SalvettiPipeline& sup,
                                         const SalvettiPipeline& sub,
                                         const std::vector<int>& idxmap) {
    // face-level restriction table
    std::vector<int> face_to_sub(sup.fl.faces.size());
    for (size_t f = 0; f < sup.fl.faces.size(); ++f) {
        int t = sub.fl.index_of(restrict_covector(sup.fl.faces[f], idxmap));
        if (t < 0) throw std::logic_error("cellular_restriction: restricted face not realized");
        face_to_sub[f] = t;
    }
    // every sup cell maps to a sub cell, possibly of lower dimension
    std::vector<int> cell_to_sub(sup.cw.cells.size());
    for (size_t c = 0; c < sup.cw.cells.size(); ++c) {
        const SalCell& cell = sup.cw.cells[c];
        int t = sub.cw.cell_index(face_to_sub[cell.face], face_to_sub[cell.chamber]);
        if (t < 0) throw std::logic_error("cellular_restriction: missing image cell");
        cell_to_sub[c] = t;
    }

    CellularRestriction res;
    res.image.assign(sup.cw.cells.size(), std::nullopt);
    for (size_t c = 0; c < sup.cw.cells.size(); ++c) {
        const int k = sup.cw.cells[c].dim;
        const int t = cell_to_sub[c];
        if (sub.cw.cells[t].dim != k) continue; // codimension dropped: cell maps to 0

        // Push every top chain through; nondegenerate images are top chains
        // of the image cell and must all report the same local degree.
        std::map<std::vector<int>, long long> acc;
        const auto& chains = sup.cw.chains[c];
        for (size_t i = 0; i < chains.size(); ++i) {
            std::vector<int> img(chains[i].size());
            bool degenerate = false;
            for (size_t j = 0; j < chains[i].size(); ++j) {
                img[j] = cell_to_sub[chains[i][j]];
                if (j > 0 && img[j] == img[j - 1]) { degenerate = true; break; }
            }
            if (degenerate) continue;
            acc[img] += sup.cw.chain_eps[c][i];
        }
        int eta = 0;
        const auto& tchains = sub.cw.chains[t];
        for (size_t di = 0; di < tchains.size(); ++di) {
            auto it = acc.find(tchains[di]);
            long long v = it == acc.end() ? 0 : it->second;
            long long expectation_unit = v * sub.cw.chain_eps[t][di];
            if (eta == 0) eta = static_cast<int>(expectation_unit);
            if (expectation_unit != eta)
                throw std::logic_error("cellular_restriction: inconsistent local degree");
        }
        if (eta != 1 && eta != -1)
            throw std::logic_error("cellular_restriction: local degree not a unit");
        res.image[c] = std::make_pair(t, eta);
    }
    return res;
}

ChainMapFp inclusion_chain_map(const SalvettiPipeline& sup, const TwistedQuotientComplex& sup_q,
                               const SalvettiPipeline& sub, const TwistedQuotientComplex& sub_q,
                               const std::vector<int>& idxmap) {
    if (sup_q.p != sub_q.p || sup_q.twist != sub_q.twist)
        throw std::invalid_argument("inclusion_chain_map: quotients built with different p or twist");

    CellularRestriction res = cellular_restriction(sup, sub, idxmap);

    auto transport_sign = [&](int gi, int cell) {
        int s = orientation_sign(sub.cw, sub.ca, sub.act, gi, cell);
        if (sub_q.twist == Twist::sign) s *= sub.act.group[gi].sgn();
        return s;
    };

    ChainMapFp cm;
    cm.source = complex_from_quotient(sup_q);
    cm.target = complex_from_quotient(sub_q);
    cm.f.resize(sup_q.top_dim + 1);
    for (int k = 0; k <= sup_q.top_dim; ++k) {
        int trows = k <= sub_q.top_dim ? static_cast<int>(sub_q.gens[k].size()) : 0;
        MatrixFp m(sup_q.p, trows, static_cast<int>(sup_q.gens[k].size()));
        for (size_t j = 0; j < sup_q.gens[k].size(); ++j) {
            int r = sup.orbits.rep[sup_q.gens[k][j]];
            if (!res.image[r]) continue;
            auto [t, eta] = *res.image[r];
            int o = sub.orbits.orbit_of[t];
            if (!sub_q.alive[o]) continue;
            int row = sub_q.gen_index_of_orbit[o];
            int val = eta * transport_sign(sub.orbits.transporter[t], t);
            m.set_from_int(row, static_cast<int>(j), val);
        }
        cm.f[k] = std::move(m);
    }
    cm.validate();
    return cm;
}

ChainComplexFp kernel_complex(const ChainMapFp& f,
                              std::vector<std::vector<std::vector<int>>>* basis_out) {
    const int top = f.source.top_dim();
    std::vector<std::vector<std::vector<int>>> bases(top + 1);
    for (int k = 0; k <= top; ++k) bases[k] = fp_nullspace_basis(f.f[k]);

    ChainComplexFp ker;
    ker.p = f.source.p;
    ker.dims.resize(top + 1);
    ker.labels.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        ker.dims[k] = static_cast<int>(bases[k].size());
        for (size_t i = 0; i < bases[k].size(); ++i)
            ker.labels[k].push_back("k" + std::to_string(k) + "_" + std::to_string(i));
    }
    ker.boundary.assign(top + 1, MatrixFp(ker.p, 0, 0));
    for (int k = 1; k <= top; ++k) {
        MatrixFp nk_prev = columns_matrix(ker.p, f.source.dims[k - 1], bases[k - 1]);
        MatrixFp m(ker.p, ker.dims[k - 1], ker.dims[k]);
        for (size_t j = 0; j < bases[k].size(); ++j) {
            std::vector<int> w = fp_mat_vec(f.source.boundary[k], bases[k][j]);
            std::vector<int> x;
            if (!fp_solve(nk_prev, w, x))
                throw std::logic_error("kernel_complex: boundary left the kernel");
            for (int r = 0; r < m.rows; ++r) m.at(r, static_cast<int>(j)) = x[r];
        }
        ker.boundary[k] = std::move(m);
    }
    ker.validate();
    if (basis_out) *basis_out = std::move(bases);
    return ker;
}

std::vector<MatrixFp> induced_map_on_homology(const ChainMapFp& f, const HomologySummary& src,
                                              const HomologySummary& tgt) {
    const int p = f.source.p;
    const int top_s = f.source.top_dim();
    const int top_t = f.target.top_dim();
    std::vector<MatrixFp> out(top_s + 1, MatrixFp(p, 0, 0));
    for (int k = 0; k <= top_s; ++k) {
        int bs = src.betti[k];
        int bt = k <= top_t ? tgt.betti[k] : 0;
        MatrixFp m(p, bt, bs);
        if (bs > 0 && bt > 0) {
            // columns: [target homology reps | target boundaries]; solve for
            // each image cycle and keep the homology coordinates
            std::vector<std::vector<int>> cols = tgt.representatives[k];
            MatrixFp bnd = k + 1 <= top_t ? f.target.boundary[k + 1]
                                          : MatrixFp(p, f.target.dims[k], 0);
            MatrixFp solve_mat(p, f.target.dims[k], static_cast<int>(cols.size()) + bnd.cols);
            for (size_t j = 0; j < cols.size(); ++j)
                for (int r = 0; r < solve_mat.rows; ++r)
                    solve_mat.at(r, static_cast<int>(j)) = cols[j][r];
            for (int j = 0; j < bnd.cols; ++j)
                for (int r = 0; r < solve_mat.rows; ++r)
                    solve_mat.at(r, static_cast<int>(cols.size()) + j) = bnd.at(r, j);
            for (int j = 0; j < bs; ++j) {
                std::vector<int> img = fp_mat_vec(f.f[k], src.representatives[k][j]);
                std::vector<int> x;
                if (!fp_solve(solve_mat, img, x))
                    throw std::logic_error("induced_map_on_homology: image not a cycle class");
                for (int r = 0; r < bt; ++r) m.at(r, j) = x[r];
            }
        } else if (bs > 0 && bt == 0) {
            // maps to zero; nothing to record beyond the shape
        }
        out[k] = std::move(m);
    }
    return out;
}

} // namespace salkit
