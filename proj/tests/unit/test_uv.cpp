#include "oracles.hpp"

#include <bsym/error.hpp>
#include <bsym/random.hpp>
#include <bsym/uv_construction.hpp>

#include <doctest.h>

using namespace bsym;

namespace {

LinearCode sum_zero_q3_n4() {
    return LinearCode::from_generator(Matrix::from_values(Field::make(3), {{1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}}));
}

} // namespace

TEST_SUITE("uv_construction") {

TEST_CASE("spec validation") {
    const Field f3 = Field::make(3);
    CHECK_THROWS_AS(UvSpec(sum_zero_q3_n4(), LinearCode::zero_code(f3, 4)), DomainError);
    const LinearCode even = LinearCode::full_space(Field::make(2), 4);
    CHECK_THROWS_AS(UvSpec(even, even), DomainError);
    CHECK_THROWS_AS(UvSpec(sum_zero_q3_n4(), LinearCode::full_space(f3, 5)), DomainError);
    CHECK_THROWS_AS(uv_mixing_matrix(Field::make(4)), DomainError);
}

TEST_CASE("ternary sum-zero [u+v, u-v] code") {
    const UvSpec spec(sum_zero_q3_n4(), sum_zero_q3_n4());
    const LinearCode c = uv_construct(spec);
    CHECK(c.length() == 8);
    CHECK(c.dimension() == 6);
    CHECK(oracle::distances(c)[2] == 4);

    const UvBounds b = uv_bounds(spec, 3);
    CHECK(b.d1 == 4);
    CHECK(b.d2 == 4);
    CHECK(b.lower() == 4);
    CHECK(b.mds_upper == std::optional<std::size_t>(5));
    CHECK(b.upper() == 5);
    CHECK(b.sandwich_lower == 4);
    CHECK(b.sandwich_upper == 8);
}

TEST_CASE("[u, u] from v = 0") {
    const Field f = Field::make(5);
    Rng rng(4);
    const LinearCode c1 = random_code(f, 4, 2, rng), c2 = random_code(f, 4, 3, rng);
    const UvSpec spec(c1, c2);
    const Word u = c1.encode(random_word(f, 2, rng));
    Word uu = u;
    uu.insert(uu.end(), u.begin(), u.end());
    CHECK(encode(spec.as_matrix_product(), std::vector<Word>{u, Word(4, f.zero())}) == uu);
    CHECK(uv_construct(spec).contains(uu));
}

TEST_CASE("equal constituents") {
    const Field f = Field::make(3);
    Rng rng(12);
    for (int t = 0; t < 10; ++t) {
        const LinearCode c = random_code(f, 4, 1 + draw(rng, 3), rng);
        const UvSpec spec(c, c);
        for (std::size_t b = 1; b <= 4; ++b) {
            const UvBounds ub = uv_bounds(spec, b);
            CHECK(ub.lower_first == ub.d1);
            CHECK(ub.lower_second == ub.d1);
        }
    }
}

TEST_CASE("intersection") {
    const Field f = Field::make(3);
    const LinearCode a = LinearCode::from_generator(Matrix::from_values(f, {{1, 0, 0}, {0, 1, 0}}));
    const LinearCode b = LinearCode::from_generator(Matrix::from_values(f, {{0, 1, 0}, {0, 0, 1}}));
    const LinearCode both = intersection(a, b);
    CHECK(both.dimension() == 1);
    CHECK(both.contains(Word{f.zero(), f.one(), f.zero()}));
    CHECK(intersection(a, a) == a);
}

TEST_CASE("sum-zero code has d_b = b + 1") {
    for (std::uint32_t q : {3u, 5u}) {
        const Field f = Field::of_order(q);
        for (std::size_t n = 2; oracle::ipow(q, n - 1) <= 4096; ++n) {
            const auto d = oracle::distances(sum_zero_code(f, n));
            for (std::size_t b = 1; b < n; ++b) CHECK(d[b - 1] == b + 1);
        }
    }
}

TEST_CASE("AMDS certificates") {
    const Field f3 = Field::make(3);
    const AmdsCertificate small = build_amds(f3, 4, 3);
    CHECK(small.valid());
    CHECK(small.d_b() == 4);
    CHECK(small.upper_witness == Word{f3.element(2), f3.element(1), f3.zero(), f3.zero(), f3.zero(), f3.zero(),
                                      f3.zero(), f3.zero()});
    CHECK(oracle::distances(small.code)[2] == 4);

    const AmdsCertificate big = build_amds(f3, 10, 3);
    CHECK(big.valid());
    CHECK(big.code.length() == 20);
    CHECK(big.code.dimension() == 18);
    CHECK(big.d_b() == 4);
    CHECK(hamming_weight(big.x) == 2);
    const HoleSet h = holes(hamming_support(big.x), 10);
    REQUIRE(h.holes.size() == 1);
    CHECK(h.holes[0].size == 8);
    CHECK(HoleSet::covers(h.holes[0], 9, 10));

    // Exhaustive cross-check where the product code is small enough.
    for (std::size_t n = 3; n <= 4; ++n)
        for (std::size_t b = 1; b < n; ++b) {
            const AmdsCertificate c = build_amds(f3, n, b);
            CHECK(c.valid());
            CHECK(oracle::distances(c.code)[b - 1] == b + 1);
        }

    CHECK_THROWS_AS(build_amds(Field::make(2), 5, 2), DomainError);
    CHECK_THROWS_AS(build_amds(f3, 2, 1), DomainError);
    CHECK_THROWS_AS(build_amds(f3, 5, 5), DomainError);
    CHECK_THROWS_AS(build_amds(f3, 5, 0), DomainError);
}

TEST_CASE("bounds hold on random odd-characteristic specs") {
    Rng rng(55);
    for (int t = 0; t < 80; ++t) {
        const Field f = Field::of_order(t % 2 ? 3 : 5);
        const std::size_t n = 2 + draw(rng, 3);
        const std::size_t k1 = 1 + draw(rng, n), k2 = 1 + draw(rng, n);
        if (oracle::ipow(f.order(), k1 + k2) > 4096) continue;
        const UvSpec spec(random_code(f, n, k1, rng), random_code(f, n, k2, rng));
        const auto exact = oracle::distances(uv_construct(spec));
        for (std::size_t b = 1; b <= n; ++b) {
            const UvBounds ub = uv_bounds(spec, b);
            CHECK(ub.lower() <= exact[b - 1]);
            CHECK(ub.sandwich_lower <= exact[b - 1]);
            CHECK(exact[b - 1] <= ub.sandwich_upper);
            CHECK(exact[b - 1] <= ub.upper());
            if (ub.certified()) CHECK(*ub.certified() == exact[b - 1]);
        }
    }
}

} // TEST_SUITE
