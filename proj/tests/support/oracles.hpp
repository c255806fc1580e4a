#pragma once

// Deliberately naive reference implementations. They share nothing with the library
// beyond Field arithmetic and the Matrix container, so agreement is meaningful.

#include <bsym/linear_code.hpp>

#include <cstdint>
#include <vector>

namespace oracle {

using bsym::Field;
using bsym::FieldElement;
using bsym::Word;

// Number of i in Z_n whose window x_i .. x_{i+b-1} (indices mod n) is nonzero.
inline std::size_t b_weight(const Word& x, std::size_t b) {
    const std::size_t n = x.size();
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < b; ++j) nonzero = nonzero || x[(i + j) % n].value != 0;
        w += nonzero ? 1 : 0;
    }
    return w;
}

// q^k, saturating at UINT64_MAX.
inline std::uint64_t ipow(std::uint64_t q, std::size_t k) {
    std::uint64_t v = 1;
    while (k--) {
        if (v > UINT64_MAX / q) return UINT64_MAX;
        v *= q;
    }
    return v;
}

// Every codeword, message by message, as plain linear combinations of the generator rows.
inline std::vector<Word> codewords(const bsym::Matrix& g) {
    const Field& f = g.field();
    const std::uint32_t q = f.order();
    std::vector<Word> out;
    for (std::uint64_t idx = 0; idx < ipow(q, g.rows()); ++idx) {
        Word w(g.cols(), f.zero());
        std::uint64_t v = idx;
        for (std::size_t r = 0; r < g.rows(); ++r, v /= q) {
            const FieldElement c{static_cast<std::uint16_t>(v % q)};
            for (std::size_t j = 0; j < g.cols(); ++j) w[j] = f.add(w[j], f.mul(c, g(r, j)));
        }
        out.push_back(std::move(w));
    }
    return out;
}

inline bool is_zero(const Word& w) {
    for (auto x : w)
        if (x.value != 0) return false;
    return true;
}

// d_b for b = 1..max_b (default n) by brute force.
inline std::vector<std::size_t> distances(const bsym::Matrix& g, std::size_t max_b = 0) {
    if (max_b == 0) max_b = g.cols();
    std::vector<std::size_t> best(max_b, g.cols());
    for (const Word& w : codewords(g)) {
        if (is_zero(w)) continue;
        for (std::size_t b = 1; b <= max_b; ++b) best[b - 1] = std::min(best[b - 1], b_weight(w, b));
    }
    return best;
}

inline std::vector<std::size_t> distances(const bsym::LinearCode& c) { return distances(c.generator()); }

// Product of canonical encodings a, b in GF(p)[x]/(modulus) by schoolbook multiplication.
inline std::uint32_t poly_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = f.characteristic(), e = f.degree();
    if (e == 1) return (a * b) % p;
    std::vector<std::uint32_t> da(e), db(e), prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i, a /= p, b /= p) {
        da[i] = a % p;
        db[i] = b % p;
    }
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto mod = f.modulus();
    for (std::size_t d = prod.size(); d-- > e;) {
        const std::uint32_t lead = prod[d];
        for (std::uint32_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - lead) * mod[i]) % p;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = e; i-- > 0;) out = out * p + prod[i];
    return out;
}

} // namespace oracle
