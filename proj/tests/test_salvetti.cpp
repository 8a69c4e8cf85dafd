#include <doctest.h>

#include <map>
#include <set>

#include "salkit/homology.hpp"
#include "salkit/salvetti.hpp"

#include "oracles.hpp"

using namespace salkit;

namespace {

std::vector<int> cw_betti(const CWData& cw, int p) {
    return homology_fp(complex_from_cw(cw, p)).betti;
}

} // namespace

TEST_CASE("braid(2) Salvetti complex is a circle") {
    CWData cw = build_salvetti(enumerate_faces(braid(2)));
    REQUIRE(cw.top_dim == 1);
    CHECK(cw.count_of_dim(0) == 2);
    CHECK(cw.count_of_dim(1) == 2);
    for (int e : cw.cells_by_dim[1]) {
        REQUIRE(cw.boundary[e].size() == 2);
        // each edge hits both vertices, once with +1 and once with -1
        std::multiset<int> signs;
        std::set<int> verts;
        for (auto [f, inc] : cw.boundary[e]) {
            signs.insert(inc);
            verts.insert(f);
        }
        CHECK(signs == std::multiset<int>{-1, 1});
        CHECK(verts.size() == 2);
    }
    CHECK(cw.euler_characteristic() == 0);

    BarycentricComplex bc = barycentric(cw);
    CHECK(bc.counts[0] == 4);
    CHECK(bc.counts[1] == 4);
    CHECK(bc.euler_characteristic() == 0);
    CHECK(betti_fp(bc, 2) == std::vector<int>{1, 1});
}

TEST_CASE("braid(4) cell counts and chi") {
    CWData cw = build_salvetti(enumerate_faces(braid(4)));
    CHECK(cw.count_of_dim(0) == 24);
    CHECK(cw.count_of_dim(1) == 72);
    CHECK(cw.count_of_dim(2) == 72);
    CHECK(cw.count_of_dim(3) == 24);
    CHECK(cw.euler_characteristic() == 0);

    // 3-cells have 14 facets: one per rank-1 ordered set partition above 0
    for (int c : cw.cells_by_dim[3]) CHECK(cw.facets[c].size() == 14);
}

TEST_CASE("1-cells have exactly two vertex facets across the wall") {
    FaceLattice fl = enumerate_faces(braid(3));
    CWData cw = build_salvetti(fl);
    for (int e : cw.cells_by_dim[1]) {
        auto facets = cell_facets(cw.cells[e], fl);
        REQUIRE(facets.size() == 2);
        // the two facets are vertices on the two chambers adjacent to the wall
        CHECK(facets[0].dim == 0);
        CHECK(facets[1].dim == 0);
        CHECK(facets[0].chamber != facets[1].chamber);
        for (const auto& f : facets) CHECK(f.face == f.chamber);
    }
}

TEST_CASE("face relation agrees with the covector order") {
    for (const Arrangement& arr : {braid(3), center_of_mass(4, 2)}) {
        CWData cw = build_salvetti(enumerate_faces(arr));
        std::vector<std::set<int>> below(cw.cells.size());
        for (size_t c = 0; c < cw.cells.size(); ++c)
            below[c] = std::set<int>(cw.strict_faces[c].begin(), cw.strict_faces[c].end());
        for (size_t x = 0; x < cw.cells.size(); ++x)
            for (size_t y = 0; y < cw.cells.size(); ++y) {
                if (x == y) continue;
                bool rel = below[y].count(static_cast<int>(x)) > 0;
                bool ord = covector_leq(cw.cells[x].cov, cw.cells[y].cov);
                CHECK(rel == ord);
            }
    }
}

TEST_CASE("center_of_mass(4,2) Salvetti complex") {
    FaceLattice fl = enumerate_faces(center_of_mass(4, 2));
    CWData cw = build_salvetti(fl);
    CHECK(cw.count_of_dim(0) == 48);
    CHECK(cw.count_of_dim(1) == 144);
    CHECK(cw.count_of_dim(2) == 144);
    CHECK(cw.count_of_dim(3) == 48);
    CHECK(cw.euler_characteristic() == 0);

    // each 3-cell has one facet per dim-2 face of the lattice above the center
    int dim2_faces = fl.count_of_dim(2);
    CHECK(dim2_faces == 26);
    for (int c : cw.cells_by_dim[3]) CHECK(cw.facets[c].size() == static_cast<size_t>(dim2_faces));

    // boundary sphere of a 3-cell: V - E + F = 2
    int c3 = cw.cells_by_dim[3][0];
    int v = 0, e = 0, f2 = 0;
    for (int s : cw.strict_faces[c3]) {
        if (cw.cells[s].dim == 0) ++v;
        if (cw.cells[s].dim == 1) ++e;
        if (cw.cells[s].dim == 2) ++f2;
    }
    CHECK(v - e + f2 == 2);
}

TEST_CASE("unquotiented homology of Sal(braid(4)) matches the Moebius oracle") {
    Arrangement arr = braid(4);
    auto poincare = oracles::complement_poincare(arr);
    REQUIRE(poincare == std::vector<long long>{1, 6, 11, 6});

    CWData cw = build_salvetti(enumerate_faces(arr));
    CHECK(cw_betti(cw, 2) == std::vector<int>{1, 6, 11, 6});
}

TEST_CASE("barycentric and cellular Betti numbers agree on the built-ins") {
    for (const Arrangement& arr : {braid(2), braid(3), braid(4), center_of_mass(4, 2)}) {
        CWData cw = build_salvetti(enumerate_faces(arr));
        BarycentricComplex bc = barycentric(cw);
        CHECK(bc.euler_characteristic() == cw.euler_characteristic());
        for (int p : {2, 3, 5}) {
            CAPTURE(arr.label());
            CAPTURE(p);
            CHECK(betti_fp(bc, p) == cw_betti(cw, p));
        }
    }
}

TEST_CASE("sparse rank matches dense rank") {
    std::vector<std::vector<long long>> rows{{1, 2, 0, 3}, {0, 1, 1, 1}, {1, 3, 1, 4}, {2, 0, 0, 1}};
    for (int p : {2, 3, 5}) {
        MatrixFp dense = MatrixFp::from_int(p, rows);
        SparseMatZ sparse;
        sparse.rows = 4;
        sparse.cols = 4;
        sparse.col.resize(4);
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i)
                if (rows[i][j] != 0) sparse.col[j].emplace_back(i, rows[i][j]);
        CHECK(sparse_fp_rank(sparse, p) == fp_rank(dense));
    }
}
