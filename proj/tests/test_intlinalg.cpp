#include <doctest.h>

#include <random>

#include "qlens/intlinalg.hpp"

using namespace qlens;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long max_abs) {
    std::size_t r = rng() % (max_dim + 1);
    std::size_t c = rng() % (max_dim + 1);
    IntegerMatrix m(r, c);
    std::uniform_int_distribution<long> dist(-max_abs, max_abs);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

void check_snf_contract(const IntegerMatrix& A) {
    auto snf = smith_normal_form(A);
    CHECK(snf.U * A * snf.V == snf.D);
    CHECK(abs(snf.U.determinant()) == 1);
    CHECK(abs(snf.V.determinant()) == 1);
    auto f = snf.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        CHECK(f[i] >= 1);
        CHECK(f[i + 1] % f[i] == 0);
    }
    // off-diagonal entries vanish, trailing diagonal is zero
    for (std::size_t i = 0; i < snf.D.rows(); ++i)
        for (std::size_t j = 0; j < snf.D.cols(); ++j)
            if (i != j)
                CHECK(snf.D.at(i, j) == 0);
            else if (i >= f.size())
                CHECK(snf.D.at(i, i) == 0);
}

}  // namespace

TEST_CASE("smith normal form on pinned inputs") {
    auto snf_id = smith_normal_form(IntegerMatrix::identity(3));
    CHECK(snf_id.D == IntegerMatrix::identity(3));

    auto f1 = smith_normal_form(from_rows({{2, 4}, {6, 8}})).invariant_factors();
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == 2);
    CHECK(f1[1] == 4);

    auto f2 = smith_normal_form(from_rows({{2, 0}, {3, 2}})).invariant_factors();
    REQUIRE(f2.size() == 2);
    CHECK(f2[0] == 1);
    CHECK(f2[1] == 4);
}

TEST_CASE("smith normal form of empty and degenerate shapes") {
    auto snf = smith_normal_form(IntegerMatrix(0, 3));
    CHECK(snf.D.rows() == 0);
    CHECK(snf.D.cols() == 3);
    CHECK(snf.U == IntegerMatrix::identity(0));
    CHECK(snf.V == IntegerMatrix::identity(3));
    CHECK(snf.rank() == 0);

    check_snf_contract(IntegerMatrix(4, 0));
    check_snf_contract(IntegerMatrix(3, 3));  // zero matrix
}

TEST_CASE("snf property suite: 200 random matrices") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        auto A = random_matrix(rng, 6, 10);
        check_snf_contract(A);
        // invariant factors are transpose-invariant
        auto ft = smith_normal_form(A.transpose()).invariant_factors();
        CHECK(ft == smith_normal_form(A).invariant_factors());
        // minor-gcd characterization on small matrices
        std::size_t n = std::min(A.rows(), A.cols());
        if (n > 0 && A.rows() <= 4 && A.cols() <= 4) {
            auto deltas = minor_gcds(A, n);
            auto f = smith_normal_form(A).invariant_factors();
            mpz_class prev = 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (i < f.size()) {
                    CHECK(f[i] == deltas[i] / prev);
                    prev = deltas[i];
                } else {
                    CHECK(deltas[i] == 0);
                }
            }
        }
    }
}

TEST_CASE("minor gcds on pinned inputs") {
    auto d1 = minor_gcds(IntegerMatrix::identity(2), 2);
    CHECK(d1 == std::vector<mpz_class>{1, 1});
    auto d2 = minor_gcds(from_rows({{2, 4}, {6, 8}}), 2);
    CHECK(d2 == std::vector<mpz_class>{2, 8});
    auto d3 = minor_gcds(from_rows({{2, 0}, {3, 2}}), 2);
    CHECK(d3 == std::vector<mpz_class>{1, 4});
    CHECK_THROWS_AS(minor_gcds(IntegerMatrix(2, 2), 3), SizeLimitExceeded);
}

TEST_CASE("cokernel and kernel rank") {
    CHECK(cokernel(IntegerMatrix(4, 4), 4) == AbelianGroup{4, {}});
    CHECK(cokernel(IntegerMatrix::identity(5), 5) == AbelianGroup{0, {}});
    CHECK_THROWS_AS(cokernel(IntegerMatrix(2, 5), 4), DimensionMismatch);

    CHECK(kernel_rank(IntegerMatrix(3, 3)) == 3);
    CHECK(kernel_rank(IntegerMatrix::identity(3)) == 0);

    // reduced block of the l+2 square presentation at k=2, l=3:
    // torsion Z/4 after dropping the unit factor
    auto blk = from_rows({{2, 0}, {3, 2}});
    auto g = cokernel(blk, 2);
    CHECK(g == AbelianGroup{0, {4}});

    // 4x4 presentation with columns (0,6,18,15), (0,0,3,3), 0, 0 has rank 2
    auto phi = from_rows({{0, 0, 0, 0}, {6, 0, 0, 0}, {18, 3, 0, 0}, {15, 3, 0, 0}});
    CHECK(kernel_rank(phi) == 2);
    CHECK(cokernel(phi, 4) == AbelianGroup{2, {3, 3}});
}

TEST_CASE("cokernel invariances") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto A = random_matrix(rng, 5, 8);
        if (A.cols() == 0) continue;
        auto g = cokernel(A, A.cols());
        CHECK(g.free_rank + matrix_rank(A) == A.cols());
        // invariant under unimodular transforms on either side
        auto snf = smith_normal_form(A);
        CHECK(cokernel(snf.U * A, A.cols()) == g);
        CHECK(cokernel(A * snf.V, A.cols()) == g);
        // kernel rank invariant under row/column order
        auto At = A.transpose();
        CHECK(kernel_rank(A) + A.rows() == kernel_rank(At) + At.rows());
    }
}

TEST_CASE("abelian group canonical form and rendering") {
    CHECK(AbelianGroup{0, {}}.str() == "0");
    CHECK(AbelianGroup{1, {}}.str() == "Z");
    CHECK(AbelianGroup{2, {3, 3}}.str() == "Z^2 (+) Z/3 (+) Z/3");

    // Z/4 (+) Z/6 = Z/2 (+) Z/12
    auto g = AbelianGroup::from_cyclic_orders(0, {4, 6});
    CHECK(g == AbelianGroup{0, {2, 12}});
    // unit factors disappear
    CHECK(AbelianGroup::from_cyclic_orders(3, {1, 1, 5}) == AbelianGroup{3, {5}});
    // already-chained input is preserved
    CHECK(AbelianGroup::from_cyclic_orders(0, {12, 3}) == AbelianGroup{0, {3, 12}});
}

TEST_CASE("matrix json round trip") {
    auto A = from_rows({{1, -2}, {3, 4}});
    CHECK(IntegerMatrix::from_json(A.to_json()) == A);
    IntegerMatrix big(1, 1);
    big.at(0, 0) = mpz_class("987654321098765432109876543210");
    auto doc = big.to_json();
    CHECK(doc.find("\"987654321098765432109876543210\"") != std::string::npos);
    CHECK(IntegerMatrix::from_json(doc) == big);
    CHECK_THROWS_AS(IntegerMatrix::from_json("{\"rows\":1}"), ParseError);
    CHECK_THROWS_AS(IntegerMatrix::from_json("{\"rows\":2,\"cols\":1,\"entries\":[[1]]}"),
                    ParseError);
}
