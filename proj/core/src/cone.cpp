#include "salkit/cone.hpp"

#include <stdexcept>

#include "salkit/matrix_q.hpp"

namespace salkit {

namespace {

// One inequality sum_j c_j y_j >= rhs.
struct Ineq {
    std::vector<Rational> c;
    Rational rhs;
};

int first_nonzero_var(const Ineq& q) {
    for (size_t j = 0; j < q.c.size(); ++j)
        if (q.c[j] != 0) return static_cast<int>(j);
    return -1;
}

} // namespace

bool cone_feasible(const std::vector<std::vector<long long>>& normals,
                   const SignVector& pattern) {
    if (normals.size() != pattern.size())
        throw std::invalid_argument("cone_feasible: pattern length does not match normal count");
    if (normals.empty()) return true;
    const size_t dim = normals[0].size();
    for (const auto& a : normals)
        if (a.size() != dim)
            throw std::invalid_argument("cone_feasible: normals of mixed dimension");

    // Substitute out the equality subspace: x = N y with N a nullspace basis
    // of the pattern's zero rows.
    std::vector<std::vector<long long>> zero_rows;
    for (size_t v = 0; v < normals.size(); ++v)
        if (pattern[v] == 0) zero_rows.push_back(normals[v]);

    std::vector<std::vector<Rational>> basis;
    if (zero_rows.empty()) {
        basis.resize(dim, std::vector<Rational>(dim, Rational(0)));
        for (size_t j = 0; j < dim; ++j) basis[j][j] = 1; // identity columns
    } else {
        basis = nullspace_q(MatrixQ::from_int_rows(zero_rows));
    }
    const size_t nvars = basis.size();

    // Inequalities r . y >= 1 with r = s_v * (a_v restricted to the subspace).
    std::vector<Ineq> sys;
    for (size_t v = 0; v < normals.size(); ++v) {
        if (pattern[v] == 0) continue;
        Ineq q;
        q.c.resize(nvars, Rational(0));
        for (size_t j = 0; j < nvars; ++j) {
            Rational dot(0);
            for (size_t k = 0; k < dim; ++k)
                dot += Rational(normals[v][k]) * basis[j][k];
            q.c[j] = pattern[v] > 0 ? dot : -dot;
        }
        q.rhs = 1;
        sys.push_back(std::move(q));
    }

    // Fourier-Motzkin, one variable at a time.
    for (size_t var = 0; var < nvars; ++var) {
        std::vector<Ineq> pos, neg, rest;
        for (auto& q : sys) {
            int s = sign_of(q.c[var]);
            if (s > 0) pos.push_back(std::move(q));
            else if (s < 0) neg.push_back(std::move(q));
            else rest.push_back(std::move(q));
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Ineq q;
                q.c.resize(nvars, Rational(0));
                const Rational& pc = p.c[var];
                const Rational& nc = n.c[var];
                for (size_t j = 0; j < nvars; ++j)
                    q.c[j] = -nc * p.c[j] + pc * n.c[j];
                q.rhs = -nc * p.rhs + pc * n.rhs;
                rest.push_back(std::move(q));
            }
        sys = std::move(rest);
        // Constant rows decide early.
        std::vector<Ineq> keep;
        for (auto& q : sys) {
            if (first_nonzero_var(q) < 0) {
                if (q.rhs > 0) return false;
            } else {
                keep.push_back(std::move(q));
            }
        }
        sys = std::move(keep);
    }

    for (const auto& q : sys)
        if (q.rhs > 0) return false;
    return true;
}

} // namespace salkit
