// Test-only oracles, independent of the library's enumeration and homology
// paths: ordered set partitions, a grid-sampling feasibility oracle, and the
// Moebius-function characteristic polynomial of the intersection lattice.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "salkit/arrangement.hpp"
#include "salkit/matrix_q.hpp"
#include "salkit/sign_vector.hpp"

namespace oracles {

using salkit::Arrangement;
using salkit::MatrixQ;
using salkit::Rational;
using salkit::SignVector;

// Sign vector of a rational point.
inline SignVector point_signs(const Arrangement& arr, const std::vector<Rational>& x) {
    SignVector f;
    for (const auto& h : arr.hyperplanes) {
        Rational dot(0);
        for (size_t i = 0; i < x.size(); ++i) dot += Rational(h.normal[i]) * x[i];
        f.e.push_back(static_cast<int8_t>(salkit::sign_of(dot)));
    }
    return f;
}

inline std::vector<Rational> to_point(const std::vector<long long>& num, long long den) {
    std::vector<Rational> x;
    for (long long v : num) x.push_back(Rational(v, den));
    return x;
}

// All ordered set partitions of {0..n-1}, as block lists.
inline void ordered_set_partitions_rec(std::vector<int>& remaining,
                                       std::vector<std::vector<int>>& cur,
                                       std::vector<std::vector<std::vector<int>>>& out) {
    if (remaining.empty()) {
        out.push_back(cur);
        return;
    }
    int m = static_cast<int>(remaining.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> block, rest;
        for (int i = 0; i < m; ++i)
            ((mask >> i) & 1u ? block : rest).push_back(remaining[i]);
        cur.push_back(block);
        ordered_set_partitions_rec(rest, cur, out);
        cur.pop_back();
        (void)rest;
    }
}

inline std::vector<std::vector<std::vector<int>>> ordered_set_partitions(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    ordered_set_partitions_rec(all, cur, out);
    return out;
}

// Face sign vector of a braid arrangement read off an ordered set partition
// (blocks listed from smallest coordinate value to largest).
inline SignVector osp_to_signs(const Arrangement& braid_arr,
                               const std::vector<std::vector<int>>& blocks) {
    std::vector<int> block_of(braid_arr.dim, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b]) block_of[x] = static_cast<int>(b);
    SignVector f;
    for (const auto& h : braid_arr.hyperplanes) {
        int i = -1, j = -1;
        for (size_t k = 0; k < h.normal.size(); ++k) {
            if (h.normal[k] == 1) i = static_cast<int>(k);
            if (h.normal[k] == -1) j = static_cast<int>(k);
        }
        int d = block_of[i] - block_of[j];
        f.e.push_back(static_cast<int8_t>(d == 0 ? 0 : (d < 0 ? -1 : 1)));
    }
    return f;
}

// Brute-force feasibility oracle: the set of sign patterns realized by a
// dense rational grid plus points inside every flat (nullspace combinations).
inline std::set<std::vector<int8_t>> sampled_patterns(
    const std::vector<std::vector<long long>>& normals, int dim) {
    std::set<std::vector<int8_t>> seen;
    auto record = [&](const std::vector<Rational>& x) {
        std::vector<int8_t> pat;
        for (const auto& a : normals) {
            Rational dot(0);
            for (int i = 0; i < dim; ++i) dot += Rational(a[i]) * x[i];
            pat.push_back(static_cast<int8_t>(salkit::sign_of(dot)));
        }
        seen.insert(std::move(pat));
    };

    // grid with step 1/2 over [-4, 4]
    std::vector<Rational> x(dim);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == dim) {
            record(x);
            return;
        }
        for (int num = -8; num <= 8; ++num) {
            x[k] = Rational(num, 2);
            self(self, k + 1);
        }
    };
    rec(rec, 0);

    // flat interiors: for every subset of hyperplanes, points of its nullspace
    int m = static_cast<int>(normals.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<std::vector<long long>> rows;
        for (int v = 0; v < m; ++v)
            if ((mask >> v) & 1u) rows.push_back(normals[v]);
        auto basis = salkit::nullspace_q(MatrixQ::from_int_rows(rows));
        if (basis.empty()) continue;
        // small rational combinations of basis vectors
        std::vector<int> coef(basis.size(), -2);
        auto crec = [&](auto&& self, size_t k) -> void {
            if (k == basis.size()) {
                std::vector<Rational> pt(dim, Rational(0));
                for (size_t b = 0; b < basis.size(); ++b)
                    for (int i = 0; i < dim; ++i) pt[i] += Rational(coef[b]) * basis[b][i];
                record(pt);
                return;
            }
            for (coef[k] = -2; coef[k] <= 2; ++coef[k]) self(self, k + 1);
        };
        crec(crec, 0);
    }
    return seen;
}

// Characteristic polynomial of the intersection lattice via the Moebius
// function; coefficients indexed by codimension give the complement's
// Poincare polynomial after |.|.
struct Flat {
    std::vector<int> closure; // hyperplanes containing the flat, sorted
    int codim = 0;
};

inline std::vector<long long> complement_poincare(const Arrangement& arr) {
    const int m = static_cast<int>(arr.hyperplanes.size());
    std::vector<std::vector<long long>> normals;
    for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);

    auto closure_of = [&](const std::vector<int>& gens) {
        std::vector<std::vector<long long>> rows;
        for (int v : gens) rows.push_back(normals[v]);
        int r = rows.empty() ? 0 : salkit::rank_q(MatrixQ::from_int_rows(rows));
        std::vector<int> cl;
        for (int v = 0; v < m; ++v) {
            auto rows2 = rows;
            rows2.push_back(normals[v]);
            if (salkit::rank_q(MatrixQ::from_int_rows(rows2)) == r) cl.push_back(v);
        }
        return std::make_pair(cl, r);
    };

    std::map<std::vector<int>, int> flats; // closure -> codim
    flats[closure_of({}).first] = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = flats;
        for (const auto& [cl, cd] : snapshot)
            for (int v = 0; v < m; ++v) {
                if (std::binary_search(cl.begin(), cl.end(), v)) continue;
                auto gens = cl;
                gens.push_back(v);
                auto [cl2, cd2] = closure_of(gens);
                if (!flats.count(cl2)) {
                    flats[cl2] = cd2;
                    grew = true;
                }
            }
    }

    // Moebius function from the bottom flat, by recursion over the interval
    std::vector<std::pair<std::vector<int>, int>> fl(flats.begin(), flats.end());
    std::sort(fl.begin(), fl.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<long long> mu(fl.size(), 0);
    auto leq = [&](int a, int b) { // flat a contained in flat b as subspaces
        return std::includes(fl[b].first.begin(), fl[b].first.end(),
                             fl[a].first.begin(), fl[a].first.end());
    };
    for (size_t i = 0; i < fl.size(); ++i) {
        if (fl[i].second == 0) {
            mu[i] = 1;
            continue;
        }
        long long s = 0;
        for (size_t j = 0; j < fl.size(); ++j)
            if (j != i && leq(j, i)) s += mu[j];
        mu[i] = -s;
    }

    std::vector<long long> poincare(arr.dim + 1, 0);
    for (size_t i = 0; i < fl.size(); ++i)
        poincare[fl[i].second] += mu[i] < 0 ? -mu[i] : mu[i];
    while (poincare.size() > 1 && poincare.back() == 0) poincare.pop_back();
    return poincare;
}

} // namespace oracles
