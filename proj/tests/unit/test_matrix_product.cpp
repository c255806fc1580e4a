#include "oracles.hpp"

#include <bsym/error.hpp>
#include <bsym/linalg.hpp>
#include <bsym/matrix_product.hpp>
#include <bsym/random.hpp>
#include <bsym/reed_muller.hpp>

#include <doctest.h>

using namespace bsym;

namespace {

const Field& gf3() {
    static const Field f = Field::make(3);
    return f;
}

LinearCode sum_zero_q3_n4() {
    return LinearCode::from_generator(Matrix::from_values(gf3(), {{1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}}));
}

MatrixProductSpec sum_zero_uv() {
    return MatrixProductSpec({sum_zero_q3_n4(), sum_zero_q3_n4()}, Matrix::from_values(gf3(), {{1, 1}, {1, 2}}));
}

} // namespace

TEST_SUITE("matrix_product") {

TEST_CASE("spec validation") {
    const LinearCode c = sum_zero_q3_n4();
    CHECK_THROWS_AS(MatrixProductSpec({c, c}, Matrix::from_values(gf3(), {{1, 1}, {2, 2}})), DomainError);
    CHECK_THROWS_AS(MatrixProductSpec({c}, Matrix::from_values(gf3(), {{1, 1}, {1, 2}})), DomainError);
    CHECK_THROWS_AS(MatrixProductSpec({c, LinearCode::zero_code(gf3(), 4)}, Matrix::from_values(gf3(), {{1, 1}, {1, 2}})),
                    DomainError);
    CHECK_THROWS_AS(MatrixProductSpec({c}, Matrix::from_values(Field::make(5), {{1}})), DomainError);
    CHECK_THROWS_AS(MatrixProductSpec({}, Matrix(gf3(), 0, 1)), DomainError);
}

TEST_CASE("product codes") {
    const MatrixProductSpec one({sum_zero_q3_n4()}, Matrix::from_values(gf3(), {{1}}));
    CHECK(product_code(one) == sum_zero_q3_n4());

    const LinearCode c = product_code(sum_zero_uv());
    CHECK(c.length() == 8);
    CHECK(c.dimension() == 6);
}

TEST_CASE("encode and delta") {
    const Field& f = gf3();
    const MatrixProductSpec spec = sum_zero_uv();
    const Word x{f.element(1), f.element(2), f.zero(), f.zero()};
    const Word zero(4, f.zero());

    CHECK(encode(spec, std::vector<Word>{zero, zero}) == Word(8, f.zero()));
    Word xx = x;
    xx.insert(xx.end(), x.begin(), x.end());
    CHECK(encode(spec, std::vector<Word>{x, zero}) == xx);

    const FieldElement half = f.inv(f.element(2));
    Word hx(4);
    for (std::size_t i = 0; i < 4; ++i) hx[i] = f.mul(half, x[i]);
    Word x0 = x;
    x0.insert(x0.end(), zero.begin(), zero.end());
    CHECK(encode(spec, std::vector<Word>{hx, hx}) == x0);

    const Word not_member{f.element(1), f.zero(), f.zero(), f.zero()};
    CHECK_THROWS_AS(encode(spec, std::vector<Word>{not_member, zero}), DomainError);

    CHECK(delta(f, Word(8, f.zero()), 4, 2).is_zero());
    const Word pair{f.element(1), f.element(2), f.element(1), f.element(2)};
    CHECK(delta(f, pair, 2, 2) == Matrix::from_values(f, {{1, 1}, {2, 2}}));
    CHECK_THROWS_AS(delta(f, pair, 3, 2), DomainError);
}

TEST_CASE("delta of an encoding is the message matrix times A") {
    Rng rng(8);
    const Field f = Field::make(5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + draw(rng, 4), m = 1 + draw(rng, 3), big_n = m + draw(rng, 3);
        std::vector<LinearCode> cs;
        std::vector<Word> parts;
        for (std::size_t l = 0; l < m; ++l) {
            cs.push_back(random_code(f, n, 1 + draw(rng, n), rng));
            parts.push_back(cs.back().encode(random_word(f, cs.back().dimension(), rng)));
        }
        const MatrixProductSpec spec(cs, random_full_rank(f, m, big_n, rng));
        Matrix messages(f, n, m);
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t i = 0; i < n; ++i) messages(i, l) = parts[l][i];
        const Word c = encode(spec, parts);
        CHECK(delta(f, c, n, big_n) == messages * spec.mixing());
        CHECK(product_code(spec).contains(c));
        std::size_t dim = 0;
        for (const auto& k : cs) dim += k.dimension();
        CHECK(product_code(spec).dimension() == dim);
        CHECK(product_code(spec).length() == n * big_n);
    }
}

TEST_CASE("row-span distances and bounds for the [u+v, u-v] matrix") {
    const Matrix a = Matrix::from_values(gf3(), {{1, 1}, {1, 2}});
    CHECK(leading_row_distances(a) == std::vector<std::size_t>{2, 1});
    CHECK(trailing_row_distances(a) == std::vector<std::size_t>{2, 1});

    const MatrixProductSpec spec = sum_zero_uv();
    const auto db = constituent_distances(spec, 3);
    CHECK(db == std::vector<std::size_t>{4, 4});
    CHECK(lower_bound_first_rows(spec, db) == 4);
    CHECK(lower_bound_last_rows(spec, db) == 4);
    CHECK(lower_bound_nsc(spec, db) == std::optional<std::size_t>(4));
    CHECK_THROWS_AS(upper_bound_triangular_nsc(spec, 3, db), DomainError);

    const BoundReport r = analyze_bounds(spec, 3);
    CHECK(r.exact == std::optional<std::size_t>(4));
    CHECK_FALSE(r.upper.has_value());
    CHECK(r.tight());
}

TEST_CASE("a single constituent is exact at N d_b") {
    const Field f = Field::make(5);
    const LinearCode c = LinearCode::from_generator(Matrix::from_values(f, {{1, 0, 1, 1}, {0, 1, 2, 3}}));
    const MatrixProductSpec spec({c}, Matrix::from_values(f, {{1, 2, 3}}));
    for (std::size_t b = 1; b <= 4; ++b) {
        const BoundReport r = analyze_bounds(spec, b);
        const std::size_t expected = 3 * min_b_distance(c, b);
        REQUIRE(r.upper.has_value());
        CHECK(r.upper->certificate == EqualityCertificate::FirstConstituent);
        CHECK(r.upper->certified == std::optional<std::size_t>(expected));
        CHECK(r.exact == std::optional<std::size_t>(expected));
        CHECK(r.lower_first_rows == expected);
    }
}

TEST_CASE("structured vectors satisfy the row-support inequality") {
    // Delta(c) has exactly l nonzeros in each row indexed by J and zero rows elsewhere;
    // then w_b(c) >= l * (weight of any word supported exactly on J).
    Rng rng(31);
    const Field f = Field::make(3);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 1 + draw(rng, 7), big_n = 1 + draw(rng, 4);
        const std::size_t l = 1 + draw(rng, big_n);
        Word indicator(n, f.zero());
        for (auto& v : indicator) v = draw(rng, 2) ? f.one() : f.zero();
        indicator[draw(rng, n)] = f.one();
        Word c(n * big_n, f.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (indicator[i] == f.zero()) continue;
            std::vector<std::size_t> cols(big_n);
            for (std::size_t j = 0; j < big_n; ++j) cols[j] = j;
            for (std::size_t j = big_n; j > 1; --j) std::swap(cols[j - 1], cols[draw(rng, j)]);
            for (std::size_t j = 0; j < l; ++j) c[cols[j] * n + i] = random_nonzero(f, rng);
        }
        for (std::size_t b = 1; b <= n; ++b) CHECK(oracle::b_weight(c, b) >= l * b_weight_via_holes(indicator, b));
    }
}

TEST_CASE("bounds hold against brute force on random specs") {
    Rng rng(77);
    std::size_t upper_checked = 0;
    for (int t = 0; t < 150; ++t) {
        const Field f = Field::of_order(t % 3 == 0 ? 2 : (t % 3 == 1 ? 3 : 5));
        const std::size_t n = 2 + draw(rng, 3), m = 1 + draw(rng, 2), big_n = m + draw(rng, 3);
        std::vector<LinearCode> cs;
        std::size_t k = 0;
        for (std::size_t l = 0; l < m; ++l) {
            cs.push_back(random_code(f, n, 1 + draw(rng, 2), rng));
            k += cs.back().dimension();
        }
        if (oracle::ipow(f.order(), k) > 4096) continue;
        Matrix a = random_full_rank(f, m, big_n, rng);
        if (t % 2 == 0)
            if (auto tri = random_triangular_nsc(f, m, big_n, rng)) a = *tri;
        const MatrixProductSpec spec(cs, a);
        const auto exact = oracle::distances(product_generator_matrix(spec));
        for (std::size_t b = 1; b <= n; ++b) {
            const BoundReport r = analyze_bounds(spec, b);
            CHECK(r.exact == std::optional<std::size_t>(exact[b - 1]));
            CHECK(r.lower_first_rows <= exact[b - 1]);
            CHECK(r.lower_last_rows <= exact[b - 1]);
            if (r.lower_nsc) CHECK(*r.lower_nsc <= exact[b - 1]);
            if (r.upper) {
                ++upper_checked;
                CHECK(exact[b - 1] <= r.upper->upper);
                if (r.upper->certified) CHECK(*r.upper->certified == exact[b - 1]);
            }
            if (b == 1) {
                // The classical Hamming-distance bound is the b = 1 case.
                const auto t_i = leading_row_distances(a);
                std::size_t classic = SIZE_MAX;
                for (std::size_t i = 0; i < m; ++i) classic = std::min(classic, t_i[i] * oracle::distances(cs[i]).front());
                CHECK(r.lower_first_rows == classic);
            }
        }
    }
    CHECK(upper_checked > 0);
}

TEST_CASE("the Reed-Muller recursion respects the triangular NSC upper bound") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const Field f = Field::of_order(q);
        for (std::size_t m = 2; oracle::ipow(q, m) <= 16; ++m)
            for (int r = 1; r < static_cast<int>(m * (q - 1)); ++r) {
                const RMParams params{f, r, m};
                const MatrixProductSpec spec = rm_recursion_spec(params);
                REQUIRE(is_upper_triangular(spec.mixing()));
                REQUIRE(is_nsc(spec.mixing()));
                for (std::size_t b = 1; b <= spec.block_length(); ++b) {
                    const auto db = constituent_distances(spec, b);
                    const UpperBoundReport u = upper_bound_triangular_nsc(spec, b, db);
                    CHECK(rm_db(params, b) <= u.upper);
                    CHECK(u.lower <= rm_db(params, b));
                    if (u.certified) CHECK(*u.certified == rm_db(params, b));
                }
            }
    }
}

} // TEST_SUITE
