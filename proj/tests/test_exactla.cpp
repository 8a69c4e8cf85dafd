#include <doctest.h>

#include <random>

#include "salkit/cone.hpp"
#include "salkit/matrix_fp.hpp"
#include "salkit/matrix_q.hpp"
#include "salkit/sign_vector.hpp"

#include "oracles.hpp"

using namespace salkit;

namespace {

SignVector sv(std::initializer_list<int> xs) {
    SignVector f;
    for (int x : xs) f.e.push_back(static_cast<int8_t>(x));
    return f;
}

} // namespace

TEST_CASE("rationals are canonical") {
    Rational a(2, 4), b(1, 2);
    CHECK(a == b);
    CHECK(numerator(Rational(-6, 4)) == -3);
    CHECK(denominator(Rational(-6, 4)) == 2);
    CHECK(denominator(Rational(3) / Rational(-7)) == 7); // denominator stays positive
}

TEST_CASE("rank over Q") {
    MatrixQ m = MatrixQ::from_int_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(rank_q(m) == 2);
    CHECK(nullspace_q(m).size() == 1);
}

TEST_CASE("cone_feasible basics") {
    // half-space is nonempty
    CHECK(cone_feasible({{1, -1}}, sv({1})));
    // x1>x2>x3 forces x1>x3
    CHECK_FALSE(cone_feasible({{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}, sv({1, 1, -1})));
    CHECK(cone_feasible({{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}, sv({1, 1, 1})));
    // equalities only
    CHECK(cone_feasible({{1, 0}, {0, 1}}, sv({0, 0})));
    CHECK_THROWS_AS(cone_feasible({{1, 0}}, sv({1, 1})), std::invalid_argument);
}

TEST_CASE("cone_feasible region from the center-of-mass arrangement") {
    // the region x2<x3<x1<x4, x1+x3<x2+x4 realizes (+,-,-,+,-,- | -,-,+)
    Arrangement arr = center_of_mass(4, 2);
    std::vector<std::vector<long long>> normals;
    for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);
    CHECK(cone_feasible(normals, parse_sign_vector("+--+--|--+")));
    // and its negation
    CHECK(cone_feasible(normals, parse_sign_vector("-++-++|++-")));
}

// Not every zero-relaxation of a feasible pattern is feasible (with normals
// (1,0),(0,1),(1,1) the pattern (+,-,0) is realized but (0,-,0) forces the
// origin); what does hold is that the full relaxation is feasible and that
// relaxations realized by closure points stay feasible.
TEST_CASE("zero-relaxations realized on closures stay feasible") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = 2 + trial % 2;
        int m = 1 + trial % 3;
        std::vector<std::vector<long long>> raw;
        for (int v = 0; v < m; ++v) {
            std::vector<long long> a(dim);
            bool nonzero = false;
            for (auto& x : a) {
                x = entry(rng);
                nonzero |= x != 0;
            }
            if (!nonzero) a[0] = 1;
            raw.push_back(a);
        }
        Arrangement arr = custom_arrangement(dim, raw);
        std::vector<std::vector<long long>> normals;
        for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);

        std::vector<Rational> pt;
        for (int i = 0; i < dim; ++i) pt.push_back(Rational(entry(rng) * 2 + entry(rng), 2));
        SignVector base = oracles::point_signs(arr, pt);
        REQUIRE(cone_feasible(normals, base));

        // the full relaxation (the origin) is always feasible
        SignVector zero = base;
        for (auto& x : zero.e) x = 0;
        CHECK(cone_feasible(normals, zero));

        // scaling toward the origin realizes no new relaxations, but any
        // relaxation certified by an explicit closure point must pass
        for (int t = 1; t <= 4; ++t) {
            std::vector<Rational> scaled;
            for (const auto& c : pt) scaled.push_back(c * Rational(t, 4));
            CHECK(cone_feasible(normals, oracles::point_signs(arr, scaled)));
        }
    }
}

TEST_CASE("zero-relaxation counterexample stays infeasible") {
    std::vector<std::vector<long long>> normals{{1, 0}, {0, 1}, {1, 1}};
    CHECK(cone_feasible(normals, parse_sign_vector("+-0")));
    CHECK_FALSE(cone_feasible(normals, parse_sign_vector("0-0")));
}

TEST_CASE("cone_feasible agrees with the sampling oracle") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int trial = 0; trial < 25; ++trial) {
        int dim = 2 + trial % 2;
        int m = 1 + trial % 3;
        std::vector<std::vector<long long>> raw;
        for (int v = 0; v < m; ++v) {
            std::vector<long long> a(dim);
            bool nonzero = false;
            for (auto& x : a) {
                x = entry(rng);
                nonzero |= x != 0;
            }
            if (!nonzero) a[dim - 1] = 1;
            raw.push_back(a);
        }
        Arrangement arr = custom_arrangement(dim, raw);
        std::vector<std::vector<long long>> normals;
        for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);

        auto realized = oracles::sampled_patterns(normals, dim);
        int nm = static_cast<int>(normals.size());
        std::vector<int8_t> pat(nm, 0);
        auto all = [&](auto&& self, int k) -> void {
            if (k == nm) {
                bool expected = realized.count(pat) > 0;
                SignVector f{std::vector<int8_t>(pat)};
                CHECK(cone_feasible(normals, f) == expected);
                return;
            }
            for (int8_t s : {int8_t(-1), int8_t(0), int8_t(1)}) {
                pat[k] = s;
                self(self, k + 1);
            }
        };
        all(all, 0);
    }
}

TEST_CASE("fp_rank basics") {
    CHECK(fp_rank(MatrixFp::from_int(5, {{1, 0}, {0, 1}})) == 2);
    CHECK(fp_rank(MatrixFp::from_int(2, {{2}})) == 0);
    // braid quotient d_1 = (2,2,2) at p=3 has rank 1
    CHECK(fp_rank(MatrixFp::from_int(3, {{2, 2, 2}})) == 1);
    CHECK(fp_rank(MatrixFp::from_int(2, {{2, 2, 2}})) == 0);
}

TEST_CASE("fp_rank equals rank of transpose") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int p = trial % 2 == 0 ? 3 : 5;
        int r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
        MatrixFp m(p, r, c);
        for (auto& x : m.a) x = static_cast<int>(rng() % p);
        CHECK(fp_rank(m) == fp_rank(m.transposed()));
    }
}

TEST_CASE("fp_nullspace_basis") {
    MatrixFp id3 = MatrixFp::from_int(7, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(fp_nullspace_basis(id3).empty());
    MatrixFp z23(3, 2, 3);
    CHECK(fp_nullspace_basis(z23).size() == 3);

    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        int p = trial % 2 == 0 ? 3 : 7;
        MatrixFp m(p, 2 + trial % 3, 2 + (trial * 5) % 4);
        for (auto& x : m.a) x = static_cast<int>(rng() % p);
        auto basis = fp_nullspace_basis(m);
        CHECK(static_cast<int>(basis.size()) == m.cols - fp_rank(m));
        for (const auto& v : basis) {
            auto mv = fp_mat_vec(m, v);
            for (int x : mv) CHECK(x == 0);
        }
        // composed-with-zero rank bound: A * N = 0 and rank A + rank N <= cols A
        if (!basis.empty()) {
            MatrixFp n(p, m.cols, static_cast<int>(basis.size()));
            for (size_t j = 0; j < basis.size(); ++j)
                for (int r = 0; r < m.cols; ++r) n.at(r, static_cast<int>(j)) = basis[j][r];
            CHECK(fp_mul(m, n).is_zero());
            CHECK(fp_rank(m) + fp_rank(n) <= m.cols);
        }
    }
}

TEST_CASE("matroid products") {
    SignVector a = parse_sign_vector("-+----|---");
    SignVector b = parse_sign_vector("------|---");
    CHECK(to_string(matroid_product_real(a, b), 6) == "-+----|---");

    SignVector c = parse_sign_vector("+0-+0-|00+");
    SignVector d = parse_sign_vector("------|--+");
    CHECK(to_string(matroid_product_real(c, d), 6) == "+--+--|--+");

    // idempotence on a few vectors
    for (const auto& f : {a, b, c, d})
        CHECK(matroid_product_real(f, f) == f);
}

TEST_CASE("complex matroid product and the S_2 order") {
    CHECK(s2_leq(0, 2));
    CHECK(s2_leq(1, 2));
    CHECK(s2_leq(1, -2));
    CHECK_FALSE(s2_leq(1, -1));
    CHECK_FALSE(s2_leq(2, 1));
    CHECK_FALSE(s2_leq(2, -2));

    ComplexCovector zero(std::vector<int8_t>{0, 0, 0});
    ComplexCovector psi(std::vector<int8_t>{1, -2, 2});
    CHECK(matroid_product_complex(zero, psi) == psi);

    ComplexCovector plus(std::vector<int8_t>{1});
    ComplexCovector minus(std::vector<int8_t>{-1});
    CHECK(matroid_product_complex(plus, minus) == plus);

    // i_1(F) o i_2(C) keeps real entries and fills zeros with imaginaries
    SignVector f = parse_sign_vector("0+-0");
    SignVector c = parse_sign_vector("-+-+");
    ComplexCovector v = matroid_product_complex(complexify_real(f), complexify_imaginary(c));
    CHECK(to_string(v) == "J+-I");
}
