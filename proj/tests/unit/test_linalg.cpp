#include "oracles.hpp"

#include <bsym/error.hpp>
#include <bsym/linalg.hpp>
#include <bsym/random.hpp>
#include <bsym/reed_muller.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace bsym;

namespace {

// Leibniz expansion; only for tiny matrices.
FieldElement leibniz(const Matrix& a) {
    const Field& f = a.field();
    std::vector<std::size_t> perm(a.rows());
    std::iota(perm.begin(), perm.end(), 0);
    FieldElement total = f.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        FieldElement term = f.one();
        for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, a(i, perm[i]));
        total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(Field::make(2), 3)) == 3);
    CHECK(rank(Matrix(Field::make(3), 2, 4)) == 0);
    CHECK(rank(Matrix::from_values(Field::make(3), {{1, 1}, {1, 2}})) == 2);
}

TEST_CASE("kernel examples") {
    const Field f = Field::make(5);
    const Matrix ones = Matrix::from_values(f, {{1, 1, 1, 1, 1, 1}});
    const Matrix k = kernel_basis(ones);
    CHECK(k.rows() == 5);
    CHECK((ones * k.transpose()).is_zero());
    CHECK(kernel_basis(Matrix::identity(f, 4)).rows() == 0);

    const Field f2 = Field::make(2);
    const Matrix h2 = Matrix::from_values(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    const Matrix k2 = kernel_basis(h2);
    CHECK(k2.rows() == 2);
    CHECK((h2 * k2.transpose()).is_zero());
}

TEST_CASE("NSC and triangular examples") {
    const Field f3 = Field::make(3);
    CHECK(is_nsc(Matrix::from_values(f3, {{1, 1}, {1, 2}})));
    CHECK_FALSE(is_nsc(Matrix::from_values(f3, {{1, 0, 1}, {0, 1, 1}})));
    // Exhaustive minors of G_3 = [[1,1,1],[0,1,2],[0,0,1]]: 1x1 of row 1 are 1; the 2x2
    // minors on columns {1,2}, {1,3}, {2,3} are 1, 2, 1; the determinant is 1.
    CHECK(is_nsc(gq_matrix(f3)));
    CHECK_THROWS_AS(is_nsc(Matrix::identity(f3, 3).stacked(Matrix::identity(f3, 3))), DomainError);

    CHECK(is_upper_triangular(gq_matrix(Field::make(5))));
    CHECK_FALSE(is_upper_triangular(Matrix::from_values(f3, {{0, 1}, {1, 0}})));
    CHECK(is_upper_triangular(Matrix::from_values(f3, {{2, 0, 1, 1}})));
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    Rng rng(7);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 1 + draw(rng, 4);
            Matrix a(f, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) a(r, c) = random_element(f, rng);
            CHECK(determinant(a) == leibniz(a));
            CHECK((determinant(a) != f.zero()) == (rank(a) == n));
        }
    }
}

TEST_CASE("rank, echelon and kernel properties on random matrices") {
    Rng rng(11);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 80; ++t) {
            const std::size_t rows = 1 + draw(rng, 6), cols = 1 + draw(rng, 7);
            Matrix a(f, rows, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) a(r, c) = draw(rng, 3) ? random_element(f, rng) : f.zero();
            const auto ech = reduced_echelon(a);
            const std::size_t rk = rank(a);
            CHECK(ech.reduced.rows() == rk);
            CHECK(rank(ech.reduced) == rk);
            CHECK(same_row_space(a, ech.reduced));
            for (std::size_t i = 0; i < ech.pivots.size(); ++i) CHECK(ech.reduced(i, ech.pivots[i]) == f.one());
            const Matrix k = kernel_basis(a);
            CHECK(k.rows() + rk == cols);
            if (k.rows() > 0) {
                CHECK(rank(k) == k.rows());
                CHECK((a * k.transpose()).is_zero());
            }
        }
    }
}

TEST_CASE("NSC matrices: full rank, nonzero first row, MDS leading row spans") {
    Rng rng(5);
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 30; ++t) {
            const std::size_t cols = 1 + draw(rng, std::min<std::uint32_t>(q, 5));
            const std::size_t rows = 1 + draw(rng, cols);
            const Matrix a = random_vandermonde(f, rows, cols, rng);
            REQUIRE(is_nsc(a));
            CHECK(rank(a) == rows);
            for (std::size_t c = 0; c < cols; ++c) CHECK(a(0, c) != f.zero());
            for (std::size_t i = 1; i <= rows; ++i) CHECK(oracle::distances(a.top_rows(i)).front() == cols - i + 1);
        }
    }
}

} // TEST_SUITE
