#include "bsym/reed_muller.hpp"

#include "bsym/error.hpp"
#include "bsym/linalg.hpp"

#include <algorithm>

namespace bsym {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > cap) throw CapExceeded("q^m exceeds the Reed-Muller length cap " + std::to_string(cap));
    }
    return v;
}

// Exponent vectors in [0, q-1]^m of total degree <= r, lexicographic.
void reduced_monomials(std::size_t m, std::uint32_t q, int r, std::vector<std::uint32_t>& current,
                       std::vector<std::vector<std::uint32_t>>& out) {
    if (current.size() == m) {
        out.push_back(current);
        return;
    }
    for (std::uint32_t a = 0; a < q && static_cast<int>(a) <= r; ++a) {
        current.push_back(a);
        reduced_monomials(m, q, r - static_cast<int>(a), current, out);
        current.pop_back();
    }
}

void check_generator_size(std::size_t k, std::size_t n) {
    if (static_cast<std::uint64_t>(k) * n > kMaxGeneratorEntries)
        throw CapExceeded("generator matrix would have " + std::to_string(k) + " x " + std::to_string(n) + " entries");
}

} // namespace

std::size_t RMParams::length() const {
    return static_cast<std::size_t>(checked_power(field.order(), m, kMaxReedMullerLength));
}

int RMParams::t() const {
    if (r < 0) throw DomainError("t and s are defined for r >= 0");
    return r / static_cast<int>(field.order() - 1);
}

int RMParams::s() const {
    if (r < 0) throw DomainError("t and s are defined for r >= 0");
    return r % static_cast<int>(field.order() - 1);
}

bool RMParams::is_full_space() const noexcept {
    return r >= 0 && static_cast<std::uint64_t>(r) >= m * (field.order() - 1);
}

std::vector<Word> point_order(const Field& field, std::size_t m) {
    const std::uint32_t q = field.order();
    const std::uint64_t count = checked_power(q, m, kMaxReedMullerLength);
    std::vector<Word> points(count, Word(m));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = m; i-- > 0;) {
            points[idx][i] = FieldElement{static_cast<std::uint16_t>(v % q)};
            v /= q;
        }
    }
    return points;
}

std::size_t rm_dimension(const RMParams& params) {
    if (params.r < 0) return 0;
    // Count exponent vectors by dynamic programming over the variables.
    const std::uint32_t q = params.field.order();
    const auto r = static_cast<std::size_t>(std::min<std::uint64_t>(params.r, params.m * (q - 1)));
    std::vector<std::uint64_t> ways(r + 1, 0);
    ways[0] = 1;
    for (std::size_t v = 0; v < params.m; ++v) {
        std::vector<std::uint64_t> next(r + 1, 0);
        for (std::size_t d = 0; d <= r; ++d)
            for (std::uint32_t a = 0; a < q && d + a <= r; ++a) next[d + a] += ways[d];
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto w : ways) total += w;
    return static_cast<std::size_t>(total);
}

LinearCode rm_by_evaluation(const RMParams& params) {
    const Field& f = params.field;
    const std::size_t n = params.length();
    if (params.r < 0) return LinearCode::zero_code(f, n);
    check_generator_size(rm_dimension(params), n);

    std::vector<std::vector<std::uint32_t>> monomials;
    std::vector<std::uint32_t> current;
    reduced_monomials(params.m, f.order(), params.r, current, monomials);

    const auto points = point_order(f, params.m);
    Matrix g(f, monomials.size(), n);
    for (std::size_t row = 0; row < monomials.size(); ++row)
        for (std::size_t col = 0; col < n; ++col) {
            FieldElement v = f.one();
            for (std::size_t i = 0; i < params.m; ++i) v = f.mul(v, f.pow(points[col][i], monomials[row][i]));
            g(row, col) = v;
        }
    return LinearCode::from_generator(g);
}

Matrix gq_matrix(const Field& field) {
    const auto alpha = field.elements_in_order();
    const std::size_t q = alpha.size();
    Matrix g(field, q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            FieldElement num = field.one(), den = field.one();
            for (std::size_t l = 0; l < i; ++l) {
                num = field.mul(num, field.sub(alpha[j], alpha[l]));
                den = field.mul(den, field.sub(alpha[i], alpha[l]));
            }
            g(i, j) = field.div(num, den);
        }
    return g;
}

MatrixProductSpec rm_recursion_spec(const RMParams& params) {
    if (params.m == 0 || params.r < 0) throw DomainError("the recursion needs m >= 1 and r >= 0");
    const std::uint32_t q = params.field.order();
    const std::size_t count = static_cast<std::size_t>(std::min<int>(params.r, static_cast<int>(q) - 1)) + 1;
    std::vector<LinearCode> constituents;
    for (std::size_t i = 0; i < count; ++i)
        constituents.push_back(rm_by_recursion({params.field, params.r - static_cast<int>(i), params.m - 1}));
    return MatrixProductSpec(std::move(constituents), gq_matrix(params.field).top_rows(count));
}

LinearCode rm_by_recursion(const RMParams& params) {
    const Field& f = params.field;
    const std::size_t n = params.length();
    if (params.r < 0) return LinearCode::zero_code(f, n);
    if (params.m == 0) return LinearCode::full_space(f, 1);
    check_generator_size(rm_dimension(params), n);
    return product_code(rm_recursion_spec(params));
}

std::size_t rm_d1(const RMParams& params) {
    if (params.r < 0) throw DomainError("the zero code has no minimum distance");
    if (params.is_full_space()) return 1;
    const std::uint32_t q = params.field.order();
    const auto t = static_cast<std::size_t>(params.t());
    const auto s = static_cast<std::size_t>(params.s());
    return (q - s) * static_cast<std::size_t>(checked_power(q, params.m - t - 1, kMaxReedMullerLength));
}

std::size_t rm_db(const RMParams& params, std::size_t b) {
    const std::size_t n = params.length();
    if (b < 1 || b > n) throw DomainError("b = " + std::to_string(b) + " outside 1.." + std::to_string(n));
    return std::min(rm_d1(params) + b - 1, n);
}

Word rm_successive_witness(const RMParams& params) {
    const Field& f = params.field;
    if (params.r < 0) throw DomainError("the zero code has no witness codeword");
    const std::size_t n = params.length();
    const std::uint32_t q = f.order();
    Word word(n, f.zero());

    if (params.is_full_space()) {
        word.back() = f.one();
        return word;
    }
    if (params.r == 0) {
        std::fill(word.begin(), word.end(), f.one());
        return word;
    }
    const std::size_t block = n / q;
    if (params.r < static_cast<int>(q) - 1) {
        // f(X_1) = sum_{i=1..r} a_i X_1^i vanishing at alpha_1..alpha_r (alpha_1 = 0 is automatic).
        const auto r = static_cast<std::size_t>(params.r);
        const auto alpha = f.elements_in_order();
        Matrix system(f, r - 1, r);
        for (std::size_t j = 1; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i) system(j - 1, i) = f.pow(alpha[j], i + 1);
        const Matrix coeffs = kernel_basis(system);
        for (std::size_t j = 0; j < q; ++j) {
            FieldElement y = f.zero();
            for (std::size_t i = 0; i < r; ++i) y = f.add(y, f.mul(coeffs(0, i), f.pow(alpha[j], i + 1)));
            std::fill_n(word.begin() + static_cast<std::ptrdiff_t>(j * block), block, y);
        }
        return word;
    }
    // r >= q-1 and m >= 2: embed a witness of RM(r-q+1, m-1) into the last block.
    const Word inner = rm_successive_witness({f, params.r - static_cast<int>(q) + 1, params.m - 1});
    std::copy(inner.begin(), inner.end(), word.end() - static_cast<std::ptrdiff_t>(block));
    return word;
}

RmMdsVerdict rm_is_b_mds(const RMParams& params, std::size_t b) {
    const std::size_t n = params.length();
    if (b < 1 || b > n) throw DomainError("b = " + std::to_string(b) + " outside 1.." + std::to_string(n));
    const std::size_t d1 = rm_d1(params);
    const std::size_t k = rm_dimension(params);
    if (d1 == n - k + 1) return {true, RmMdsReason::OneSymbolMds};
    if (b >= n - d1 + 1) return {true, RmMdsReason::LargeB};
    return {false, RmMdsReason::NotMds};
}

} // namespace bsym
