#include "oracles.hpp"

#include <bsym/error.hpp>
#include <bsym/field.hpp>

#include <doctest.h>

using namespace bsym;

TEST_SUITE("gf") {

TEST_CASE("prime fields") {
    const Field f = Field::make(3);
    CHECK(f.order() == 3);
    CHECK(f.modulus().empty());
    CHECK(f.add(f.element(1), f.element(2)) == f.zero());
    CHECK(f.inv(f.element(2)) == f.element(2));
    CHECK(f.elements_in_order() == std::vector<FieldElement>{f.element(0), f.element(1), f.element(2)});
    CHECK(Field::make(2).elements_in_order().size() == 2);
}

TEST_CASE("GF(4) uses x^2 + x + 1") {
    const Field f = Field::make(2, 2);
    CHECK(std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()) == std::vector<std::uint32_t>{1, 1, 1});
    const FieldElement x = f.element(2);
    CHECK(f.mul(x, x) == f.element(3)); // x * x = x + 1
    CHECK(f.format(f.element(3)) == "x+1");
    CHECK(f.order_string() == "2^2");
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4), DomainError);
    CHECK_THROWS_AS(Field::make(3, 0), DomainError);
    CHECK_THROWS_AS(Field::make(2, 17), DomainError);
    CHECK_THROWS_AS(Field::of_order(6), DomainError);
    CHECK_THROWS_AS(Field::parse("abc"), ParseError);
    CHECK_THROWS_AS(Field::make(5).inv(FieldElement{0}), DomainError);
    CHECK_THROWS_AS(Field::make(5).element(5), DomainError);
}

TEST_CASE("parse and caching") {
    CHECK(Field::parse("9") == Field::make(3, 2));
    CHECK(Field::parse("3^2") == Field::of_order(9));
    const Field a = Field::make(2, 8), b = Field::make(2, 8);
    CHECK(std::vector<std::uint32_t>(a.modulus().begin(), a.modulus().end()) ==
          std::vector<std::uint32_t>(b.modulus().begin(), b.modulus().end()));
}

TEST_CASE("moduli are irreducible: no roots for e <= 3, trial division otherwise") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        for (std::uint32_t e = 2, q = p * p; q <= 4096; ++e, q *= p) {
            CAPTURE(q);
            const Field f = Field::make(p, e);
            const auto mod = f.modulus();
            REQUIRE(mod.size() == e + 1);
            CHECK(mod.back() == 1);
            if (e <= 3) {
                for (std::uint32_t r = 0; r < p; ++r) {
                    std::uint64_t v = 0;
                    for (std::size_t i = mod.size(); i-- > 0;) v = (v * r + mod[i]) % p;
                    CHECK(v != 0);
                }
            }
            CHECK(is_irreducible(mod, p));
        }
    }
    const std::vector<std::uint32_t> reducible{1, 0, 1}; // x^2 + 1 = (x + 1)^2 over GF(2)
    CHECK_FALSE(is_irreducible(reducible, 2));
}

TEST_CASE("table arithmetic agrees with polynomial arithmetic, exhaustive axioms for q <= 64") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        CAPTURE(q);
        const Field f = Field::of_order(q);
        const auto el = f.elements_in_order();
        REQUIRE(el.size() == q);
        CHECK(el.front() == f.zero());
        bool mul_ok = true, add_ok = true, comm = true, inv_ok = true;
        for (auto a : el) {
            if (a.value != 0) inv_ok = inv_ok && f.mul(a, f.inv(a)) == f.one();
            for (auto b : el) {
                mul_ok = mul_ok && f.mul(a, b).value == oracle::poly_mul(f, a.value, b.value);
                std::uint32_t sum = 0, scale = 1, x = a.value, y = b.value;
                for (std::uint32_t i = 0; i < f.degree(); ++i, x /= f.characteristic(), y /= f.characteristic()) {
                    sum += ((x + y) % f.characteristic()) * scale;
                    scale *= f.characteristic();
                }
                add_ok = add_ok && f.add(a, b).value == sum;
                comm = comm && f.mul(a, b) == f.mul(b, a) && f.add(a, b) == f.add(b, a);
                add_ok = add_ok && f.sub(f.add(a, b), b) == a;
            }
        }
        CHECK(mul_ok);
        CHECK(add_ok);
        CHECK(comm);
        CHECK(inv_ok);
        if (q <= 27) {
            bool assoc = true, distrib = true;
            for (auto a : el)
                for (auto b : el)
                    for (auto c : el) {
                        assoc = assoc && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
                                f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                        distrib = distrib && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                    }
            CHECK(assoc);
            CHECK(distrib);
        }
        // The primitive element generates the multiplicative group.
        std::vector<bool> seen(q, false);
        FieldElement g = f.one();
        for (std::uint32_t i = 0; i + 1 < q; ++i, g = f.mul(g, f.primitive_element())) seen[g.value] = true;
        CHECK(std::count(seen.begin(), seen.end(), true) == static_cast<long>(q - 1));
    }
}

TEST_CASE("pow and from_integer") {
    const Field f = Field::make(7);
    CHECK(f.pow(f.element(3), 6) == f.one());
    CHECK(f.pow(f.zero(), 0) == f.one());
    CHECK(f.from_integer(-1) == f.element(6));
    CHECK(f.neg(f.element(2)) == f.element(5));
}

} // TEST_SUITE
