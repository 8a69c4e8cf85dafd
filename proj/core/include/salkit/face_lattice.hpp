#pragma once

#include <vector>

#include "salkit/arrangement.hpp"
#include "salkit/sign_vector.hpp"

namespace salkit {

// The realized sign vectors of an arrangement, with per-face dimensions.
struct FaceLattice {
    Arrangement arr;
    std::vector<SignVector> faces; // sorted
    std::vector<int> dims;         // dims[i] = dimension of faces[i]
    std::vector<int> chambers;     // indices of faces with no zero entry

    int index_of(const SignVector& f) const; // -1 if absent
    bool leq(int f, int g) const { return face_leq(faces[f], faces[g]); }
    int count_of_dim(int d) const;
};

// Incremental hyperplane insertion: maintain the realized set over the first
// k hyperplanes and keep each {0,+,-} extension iff cone_feasible holds.
FaceLattice enumerate_faces(const Arrangement& arr);

SignVector restrict_covector(const SignVector& f, const std::vector<int>& idxmap);
ComplexCovector restrict_covector(const ComplexCovector& x, const std::vector<int>& idxmap);

// A cell of the Salvetti complex: a pair (F, C) with F <= C, C a chamber.
struct SalCell {
    int face = -1;    // index into FaceLattice::faces
    int chamber = -1; // index into FaceLattice::faces (a chamber)
    int dim = 0;      // codim F
    ComplexCovector cov; // i_1(F) o i_2(C), nowhere zero
};

// L^(1): all pairs (F, C), F <= C, sorted by (dim, covector string).
std::vector<SalCell> salvetti_poset(const FaceLattice& fl);

} // namespace salkit
