#include "salkit/face_lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "salkit/cone.hpp"
#include "salkit/matrix_q.hpp"

namespace salkit {

int FaceLattice::index_of(const SignVector& f) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), f);
    if (it == faces.end() || !(*it == f)) return -1;
    return static_cast<int>(it - faces.begin());
}

int FaceLattice::count_of_dim(int d) const {
    int c = 0;
    for (int x : dims)
        if (x == d) ++c;
    return c;
}

FaceLattice enumerate_faces(const Arrangement& arr) {
    if (arr.hyperplanes.empty())
        throw std::invalid_argument("enumerate_faces: arrangement has no hyperplanes");

    std::vector<std::vector<long long>> normals;
    for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);

    std::vector<SignVector> current{SignVector{}};
    std::vector<std::vector<long long>> prefix;
    for (size_t k = 0; k < normals.size(); ++k) {
        prefix.push_back(normals[k]);
        std::vector<SignVector> next;
        for (const auto& f : current) {
            for (int8_t ext : {int8_t(0), int8_t(1), int8_t(-1)}) {
                SignVector cand = f;
                cand.e.push_back(ext);
                if (cone_feasible(prefix, cand)) next.push_back(std::move(cand));
            }
        }
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());

    FaceLattice fl;
    fl.arr = arr;
    fl.faces = std::move(current);
    fl.dims.reserve(fl.faces.size());
    for (size_t i = 0; i < fl.faces.size(); ++i) {
        std::vector<std::vector<long long>> zero_rows;
        for (size_t v = 0; v < normals.size(); ++v)
            if (fl.faces[i][v] == 0) zero_rows.push_back(normals[v]);
        int r = zero_rows.empty() ? 0 : rank_q(MatrixQ::from_int_rows(zero_rows));
        fl.dims.push_back(arr.dim - r);
        if (!fl.faces[i].has_zero()) fl.chambers.push_back(static_cast<int>(i));
    }
    return fl;
}

SignVector restrict_covector(const SignVector& f, const std::vector<int>& idxmap) {
    SignVector r;
    r.e.reserve(idxmap.size());
    for (int i : idxmap) {
        if (i < 0 || static_cast<size_t>(i) >= f.size())
            throw std::out_of_range("restrict_covector: index out of range");
        r.e.push_back(f[static_cast<size_t>(i)]);
    }
    return r;
}

ComplexCovector restrict_covector(const ComplexCovector& x, const std::vector<int>& idxmap) {
    ComplexCovector r;
    r.e.reserve(idxmap.size());
    for (int i : idxmap) {
        if (i < 0 || static_cast<size_t>(i) >= x.size())
            throw std::out_of_range("restrict_covector: index out of range");
        r.e.push_back(x[static_cast<size_t>(i)]);
    }
    return r;
}

std::vector<SalCell> salvetti_poset(const FaceLattice& fl) {
    std::vector<SalCell> cells;
    for (size_t fi = 0; fi < fl.faces.size(); ++fi) {
        for (int ci : fl.chambers) {
            if (!face_leq(fl.faces[fi], fl.faces[ci])) continue;
            SalCell cell;
            cell.face = static_cast<int>(fi);
            cell.chamber = ci;
            cell.dim = fl.arr.dim - fl.dims[fi];
            cell.cov = matroid_product_complex(complexify_real(fl.faces[fi]),
                                               complexify_imaginary(fl.faces[ci]));
            cells.push_back(std::move(cell));
        }
    }
    std::sort(cells.begin(), cells.end(), [](const SalCell& a, const SalCell& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return covector_string_less(a.cov, b.cov);
    });
    return cells;
}

} // namespace salkit
