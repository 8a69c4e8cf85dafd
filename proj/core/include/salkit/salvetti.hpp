#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "salkit/face_lattice.hpp"

namespace salkit {

// Regular CW structure of the Salvetti complex: one cell per pair (F, C),
// face relation generated by G > F => D(G, G o C) < D(F, C), integer
// incidence numbers from coherent orientations of each cell's barycentric
// subdivision. Construction aborts if the diamond property or d o d = 0
// fails.
struct CWData {
    FaceLattice fl;
    std::vector<SalCell> cells; // sorted by (dim, covector string)
    int top_dim = 0;

    std::vector<std::vector<int>> cells_by_dim;
    std::vector<std::vector<int>> strict_faces; // per cell: all cells strictly below, ascending id
    std::vector<std::vector<int>> facets;       // per cell: covers (dim one less)
    std::vector<std::vector<std::pair<int, int>>> boundary; // per cell: (facet id, incidence)

    // Orientation data: per cell, its maximal chains (cell ids in ascending
    // dimension, ending at the cell) with a coherent sign each.
    std::vector<std::vector<std::vector<int>>> chains;
    std::vector<std::vector<int8_t>> chain_eps;
    std::vector<std::map<std::vector<int>, int>> chain_index;

    int cell_index(int face, int chamber) const; // -1 if absent
    int count_of_dim(int d) const { return static_cast<int>(cells_by_dim[d].size()); }
    long long euler_characteristic() const;

private:
    friend CWData build_salvetti(const FaceLattice&);
    std::map<std::pair<int, int>, int> pair_to_cell_;
};

CWData build_salvetti(const FaceLattice& fl);

// The codimension-1 faces D(G, G o C) of a cell, G covering F.
std::vector<SalCell> cell_facets(const SalCell& cell, const FaceLattice& fl);

// Sparse integer matrix, one (row, value) list per column.
struct SparseMatZ {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> col; // sorted by row
};

int sparse_fp_rank(const SparseMatZ& m, int p);

// Order complex of the cell face poset, graded by chain length - 1, with the
// canonical orientation from the poset order.
struct BarycentricComplex {
    int top_dim = 0;
    std::vector<int> counts;            // simplices per dimension
    std::vector<SparseMatZ> boundary;   // boundary[k]: dim k -> dim k-1
    long long euler_characteristic() const;
};

BarycentricComplex barycentric(const CWData& cw);

std::vector<int> betti_fp(const BarycentricComplex& bc, int p);

} // namespace salkit
