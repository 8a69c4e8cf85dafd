#include "salkit/salvetti.hpp"

#include <algorithm>
#include <stdexcept>

#include "salkit/matrix_fp.hpp"

namespace salkit {

int CWData::cell_index(int face, int chamber) const {
    auto it = pair_to_cell_.find({face, chamber});
    return it == pair_to_cell_.end() ? -1 : it->second;
}

long long CWData::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= top_dim; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(cells_by_dim[d].size());
    return chi;
}

std::vector<SalCell> cell_facets(const SalCell& cell, const FaceLattice& fl) {
    std::vector<SalCell> out;
    int fdim = fl.dims[cell.face];
    for (size_t g = 0; g < fl.faces.size(); ++g) {
        if (fl.dims[g] != fdim + 1) continue;
        if (!face_leq(fl.faces[cell.face], fl.faces[g])) continue;
        SalCell facet;
        facet.face = static_cast<int>(g);
        SignVector gc = matroid_product_real(fl.faces[g], fl.faces[cell.chamber]);
        facet.chamber = fl.index_of(gc);
        if (facet.chamber < 0)
            throw std::logic_error("cell_facets: matroid product left the face lattice");
        facet.dim = cell.dim - 1;
        facet.cov = matroid_product_complex(complexify_real(fl.faces[g]),
                                            complexify_imaginary(gc));
        out.push_back(std::move(facet));
    }
    return out;
}

namespace {

// All maximal chains of the closed cell, as ascending cell-id sequences
// ending at the cell itself. Memoized bottom-up over facets.
void build_chains(CWData& cw) {
    cw.chains.resize(cw.cells.size());
    cw.chain_eps.resize(cw.cells.size());
    cw.chain_index.resize(cw.cells.size());
    for (int d = 0; d <= cw.top_dim; ++d) {
        for (int c : cw.cells_by_dim[d]) {
            auto& out = cw.chains[c];
            if (d == 0) {
                out.push_back({c});
            } else {
                for (int f : cw.facets[c])
                    for (const auto& sub : cw.chains[f]) {
                        std::vector<int> ch = sub;
                        ch.push_back(c);
                        out.push_back(std::move(ch));
                    }
            }
            std::sort(out.begin(), out.end());
            for (size_t i = 0; i < out.size(); ++i)
                cw.chain_index[c].emplace(out[i], static_cast<int>(i));
        }
    }
}

// Coherent orientation of one cell: top chains written grade-by-grade get
// opposite signs exactly when they differ in a single interior position, so
// a 2-coloring of the chain adjacency graph orients the cell. Ridge groups
// of size other than two violate regularity (diamond property).
void orient_cell(CWData& cw, int c) {
    const auto& chains = cw.chains[c];
    const int k = cw.cells[c].dim;
    auto& eps = cw.chain_eps[c];
    eps.assign(chains.size(), 0);
    if (k == 0) {
        eps[0] = 1;
        return;
    }

    std::map<std::vector<int>, std::vector<int>> ridge_groups;
    for (size_t i = 0; i < chains.size(); ++i) {
        for (int pos = 0; pos < k; ++pos) { // interior positions only
            std::vector<int> ridge = chains[i];
            ridge.erase(ridge.begin() + pos);
            ridge.push_back(pos); // tag the removed grade
            ridge_groups[ridge].push_back(static_cast<int>(i));
        }
    }
    std::vector<std::vector<int>> adj(chains.size());
    for (const auto& [ridge, members] : ridge_groups) {
        if (members.size() != 2)
            throw std::logic_error("build_salvetti: diamond property violated");
        adj[members[0]].push_back(members[1]);
        adj[members[1]].push_back(members[0]);
    }

    std::vector<int> stack{0};
    eps[0] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : adj[i]) {
            if (eps[j] == 0) {
                eps[j] = static_cast<int8_t>(-eps[i]);
                stack.push_back(j);
            } else if (eps[j] != -eps[i]) {
                throw std::logic_error("build_salvetti: cell subdivision not orientable");
            }
        }
    }
    for (int8_t e : eps)
        if (e == 0) throw std::logic_error("build_salvetti: cell subdivision not connected");
}

} // namespace

CWData build_salvetti(const FaceLattice& fl) {
    CWData cw;
    cw.fl = fl;
    cw.cells = salvetti_poset(fl);
    cw.top_dim = 0;
    for (const auto& c : cw.cells) cw.top_dim = std::max(cw.top_dim, c.dim);
    cw.cells_by_dim.assign(cw.top_dim + 1, {});
    for (size_t i = 0; i < cw.cells.size(); ++i) {
        cw.cells_by_dim[cw.cells[i].dim].push_back(static_cast<int>(i));
        cw.pair_to_cell_[{cw.cells[i].face, cw.cells[i].chamber}] = static_cast<int>(i);
    }

    // Face relation from the generating rule G > F.
    cw.strict_faces.resize(cw.cells.size());
    cw.facets.resize(cw.cells.size());
    for (size_t i = 0; i < cw.cells.size(); ++i) {
        const SalCell& cell = cw.cells[i];
        for (size_t g = 0; g < fl.faces.size(); ++g) {
            if (static_cast<int>(g) == cell.face) continue;
            if (!face_leq(fl.faces[cell.face], fl.faces[g])) continue;
            SignVector gc = matroid_product_real(fl.faces[g], fl.faces[cell.chamber]);
            int ci = fl.index_of(gc);
            if (ci < 0) throw std::logic_error("build_salvetti: product left the face lattice");
            int sub = cw.cell_index(static_cast<int>(g), ci);
            if (sub < 0) throw std::logic_error("build_salvetti: missing subcell");
            cw.strict_faces[i].push_back(sub);
            if (cw.cells[sub].dim == cell.dim - 1) cw.facets[i].push_back(sub);
        }
        std::sort(cw.strict_faces[i].begin(), cw.strict_faces[i].end());
        std::sort(cw.facets[i].begin(), cw.facets[i].end());
    }

    build_chains(cw);
    for (size_t c = 0; c < cw.cells.size(); ++c) orient_cell(cw, static_cast<int>(c));

    // Incidence numbers: read off the induced sign on any top chain of the
    // facet inside the boundary of the oriented cell, and insist all chains
    // of the facet give the same answer.
    cw.boundary.resize(cw.cells.size());
    for (size_t c = 0; c < cw.cells.size(); ++c) {
        const int k = cw.cells[c].dim;
        if (k == 0) continue;
        const int sign_k = (k % 2 == 0) ? 1 : -1;
        if (cw.facets[c].size() < 2)
            throw std::logic_error("build_salvetti: cell with fewer than two facets");
        for (int f : cw.facets[c]) {
            int incidence = 0;
            for (size_t di = 0; di < cw.chains[f].size(); ++di) {
                std::vector<int> ext = cw.chains[f][di];
                ext.push_back(static_cast<int>(c));
                auto it = cw.chain_index[c].find(ext);
                if (it == cw.chain_index[c].end())
                    throw std::logic_error("build_salvetti: facet chain missing in cell");
                int val = sign_k * cw.chain_eps[c][it->second] * cw.chain_eps[f][di];
                if (incidence == 0) incidence = val;
                else if (incidence != val)
                    throw std::logic_error("build_salvetti: inconsistent incidence sign");
            }
            cw.boundary[c].emplace_back(f, incidence);
        }
    }

    // d o d = 0 over the integers.
    for (size_t c = 0; c < cw.cells.size(); ++c) {
        if (cw.cells[c].dim < 2) continue;
        std::map<int, long long> acc;
        for (const auto& [f, s1] : cw.boundary[c])
            for (const auto& [g, s2] : cw.boundary[f])
                acc[g] += static_cast<long long>(s1) * s2;
        for (const auto& [g, v] : acc)
            if (v != 0) throw std::logic_error("build_salvetti: d o d != 0");
    }
    return cw;
}

long long BarycentricComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= top_dim; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[d]);
    return chi;
}

BarycentricComplex barycentric(const CWData& cw) {
    // All chains of the cell poset, graded by length - 1, enumerated by DFS
    // upward from each cell.
    std::vector<std::map<std::vector<int>, int>> index(cw.top_dim + 1);
    std::vector<std::vector<std::vector<int>>> simplices(cw.top_dim + 1);
    auto emit = [&](const std::vector<int>& chain) {
        int d = static_cast<int>(chain.size()) - 1;
        index[d].emplace(chain, static_cast<int>(simplices[d].size()));
        simplices[d].push_back(chain);
    };
    std::vector<std::vector<int>> above(cw.cells.size());
    for (size_t c = 0; c < cw.cells.size(); ++c)
        for (int f : cw.strict_faces[c]) above[f].push_back(static_cast<int>(c));
    std::vector<int> chain;
    auto up = [&](auto&& self, int bottom) -> void {
        chain.push_back(bottom);
        emit(chain);
        for (int g : above[bottom]) self(self, g);
        chain.pop_back();
    };
    for (size_t c = 0; c < cw.cells.size(); ++c) up(up, static_cast<int>(c));

    BarycentricComplex bc;
    bc.top_dim = cw.top_dim;
    bc.counts.resize(cw.top_dim + 1);
    for (int d = 0; d <= cw.top_dim; ++d) bc.counts[d] = static_cast<int>(simplices[d].size());

    bc.boundary.resize(cw.top_dim + 1);
    for (int d = 1; d <= cw.top_dim; ++d) {
        SparseMatZ& m = bc.boundary[d];
        m.rows = bc.counts[d - 1];
        m.cols = bc.counts[d];
        m.col.resize(m.cols);
        for (int j = 0; j < m.cols; ++j) {
            const auto& s = simplices[d][j];
            for (int i = 0; i <= d; ++i) {
                std::vector<int> fct = s;
                fct.erase(fct.begin() + i);
                auto it = index[d - 1].find(fct);
                if (it == index[d - 1].end())
                    throw std::logic_error("barycentric: missing facet simplex");
                m.col[j].emplace_back(it->second, (i % 2 == 0) ? 1 : -1);
            }
            std::sort(m.col[j].begin(), m.col[j].end());
        }
    }
    return bc;
}

int sparse_fp_rank(const SparseMatZ& m, int p) {
    // Column reduction: eliminate against the recorded pivot of the lowest
    // row index until the column dies or claims a pivot.
    auto normalize = [&](std::vector<std::pair<int, long long>>& col) {
        for (auto& [r, v] : col) {
            v %= p;
            if (v < 0) v += p;
        }
        col.erase(std::remove_if(col.begin(), col.end(),
                                 [](const auto& e) { return e.second == 0; }),
                  col.end());
    };
    auto axpy = [&](const std::vector<std::pair<int, long long>>& x, long long a,
                    const std::vector<std::pair<int, long long>>& y) {
        // y + a*x, both sorted by row
        std::vector<std::pair<int, long long>> out;
        out.reserve(x.size() + y.size());
        size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                long long v = a * x[i].second % p;
                if (v < 0) v += p;
                if (v != 0) out.emplace_back(x[i].first, v);
                ++i;
            } else if (i == x.size() || y[j].first < x[i].first) {
                out.push_back(y[j]);
                ++j;
            } else {
                long long v = (y[j].second + a * x[i].second) % p;
                if (v < 0) v += p;
                if (v != 0) out.emplace_back(y[j].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    };

    std::vector<std::vector<std::pair<int, long long>>> pivot_col(m.rows);
    std::vector<char> has_pivot(m.rows, 0);
    int rank = 0;
    for (int j = 0; j < m.cols; ++j) {
        auto col = m.col[j];
        normalize(col);
        while (!col.empty()) {
            int low = col.back().first;
            if (!has_pivot[low]) {
                long long inv = fp_inv(static_cast<int>(col.back().second), p);
                for (auto& [r, v] : col) v = v * inv % p;
                pivot_col[low] = std::move(col);
                has_pivot[low] = 1;
                ++rank;
                break;
            }
            long long a = p - col.back().second; // pivot entry is 1
            col = axpy(pivot_col[low], a, col);
        }
    }
    return rank;
}

std::vector<int> betti_fp(const BarycentricComplex& bc, int p) {
    std::vector<int> ranks(bc.top_dim + 2, 0);
    for (int d = 1; d <= bc.top_dim; ++d) ranks[d] = sparse_fp_rank(bc.boundary[d], p);
    std::vector<int> betti(bc.top_dim + 1);
    for (int d = 0; d <= bc.top_dim; ++d)
        betti[d] = bc.counts[d] - ranks[d] - ranks[d + 1];
    return betti;
}

} // namespace salkit
