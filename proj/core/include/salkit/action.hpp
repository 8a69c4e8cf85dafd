#pragma once

#include <string>
#include <vector>

#include "salkit/matrix_fp.hpp"
#include "salkit/salvetti.hpp"

namespace salkit {

// A bijection of {0..n-1}; img[i] is the image of i.
struct Permutation {
    std::vector<int> img;

    static Permutation identity(int n);
    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }
    Permutation compose(const Permutation& then) const; // (this then) applied as this after then
    Permutation inverse() const;
    int sgn() const;
    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }
};

std::vector<Permutation> symmetric_group(int n);

// For each group element g and hyperplane v: g . a_v = eps . a_w.
struct HyperplaneAction {
    std::vector<Permutation> group;
    std::vector<std::vector<std::pair<int, int8_t>>> table; // [g][v] = (w, eps)

    int group_index(const Permutation& g) const;
    int compose(int gi, int hi) const; // index of group[gi] after group[hi]
    int inverse(int gi) const;
};

// The full symmetric group acting by coordinate permutation; throws if some
// permutation does not map the arrangement to itself.
HyperplaneAction build_hyperplane_action(const Arrangement& arr);

SignVector act_on_covector(const HyperplaneAction& act, int gi, const SignVector& f);
ComplexCovector act_on_covector(const HyperplaneAction& act, int gi, const ComplexCovector& x);

// Cached action of every group element on faces and cells.
struct CellAction {
    std::vector<std::vector<int>> face_perm; // [g][face id] -> face id
    std::vector<std::vector<int>> cell_perm; // [g][cell id] -> cell id
};

CellAction build_cell_action(const CWData& cw, const HyperplaneAction& act);

// Sign relating the g-pushforward of the cell's coherent orientation to the
// chosen orientation of g . cell, read off one transported top chain.
int orientation_sign(const CWData& cw, const CellAction& ca, const HyperplaneAction& act,
                     int gi, int cell);

struct OrbitData {
    std::vector<int> orbit_of;                 // cell -> orbit
    std::vector<int> rep;                      // orbit -> representative cell
    std::vector<int> transporter;              // cell -> gi with g . cell = rep
    std::vector<std::vector<int>> members;     // orbit -> cells
    std::vector<std::vector<int>> stabilizer;  // orbit -> gi with g . rep = rep
};

// Orbit partition with lexicographically minimal covector representatives.
OrbitData cell_orbits(const CWData& cw, const HyperplaneAction& act, const CellAction& ca);

enum class Twist { sign, trivial };

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;
    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// One generator per live cell orbit, boundaries pushed to representatives via
// transporters with sgn and orientation-transport signs, reduced mod p.
struct TwistedQuotientComplex {
    int p = 2;
    Twist twist = Twist::sign;
    int top_dim = 0;
    std::vector<std::vector<int>> gens;          // per dim: live orbit ids
    std::vector<std::vector<std::string>> labels; // per dim: representative covector strings
    std::vector<char> alive;                     // per orbit
    std::vector<int> gen_index_of_orbit;         // orbit -> column index (-1 if dead)
    std::vector<IntMatrix> boundary_z;           // integer lift, index 1..top_dim
    std::vector<MatrixFp> boundary;              // mod p, index 1..top_dim
};

TwistedQuotientComplex twisted_quotient(const CWData& cw, const HyperplaneAction& act,
                                        const CellAction& ca, const OrbitData& orbits,
                                        int p, Twist twist);

// Everything derived from one arrangement, built once and shared.
struct SalvettiPipeline {
    Arrangement arr;
    FaceLattice fl;
    CWData cw;
    HyperplaneAction act;
    CellAction ca;
    OrbitData orbits;
};

SalvettiPipeline build_pipeline(const Arrangement& arr);

} // namespace salkit
