#include "bsym/random.hpp"

#include "bsym/error.hpp"
#include "bsym/linalg.hpp"

#include <algorithm>

namespace bsym {

std::uint64_t draw(Rng& rng, std::uint64_t bound) { return rng() % bound; }

FieldElement random_element(const Field& field, Rng& rng) {
    return FieldElement{static_cast<std::uint16_t>(draw(rng, field.order()))};
}

FieldElement random_nonzero(const Field& field, Rng& rng) {
    return FieldElement{static_cast<std::uint16_t>(1 + draw(rng, field.order() - 1))};
}

Word random_word(const Field& field, std::size_t n, Rng& rng) {
    Word w(n);
    for (auto& x : w) x = random_element(field, rng);
    return w;
}

Matrix random_full_rank(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows > cols) throw DomainError("a full row rank matrix needs rows <= cols");
    for (;;) {
        Matrix m(field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(field, rng);
        if (rank(m) == rows) return m;
    }
}

LinearCode random_code(const Field& field, std::size_t n, std::size_t k, Rng& rng) {
    if (k == 0) return LinearCode::zero_code(field, n);
    return LinearCode::from_generator(random_full_rank(field, k, n, rng));
}

LinearCode random_code_by_parity(const Field& field, std::size_t n, std::size_t r, Rng& rng) {
    if (r == 0) return LinearCode::full_space(field, n);
    return LinearCode::from_parity_check(random_full_rank(field, r, n, rng));
}

Matrix random_vandermonde(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
    if (cols > field.order()) throw DomainError("a Vandermonde matrix needs at most q columns");
    auto points = field.elements_in_order();
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[draw(rng, i)]);
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.pow(points[c], r);
    return m;
}

std::optional<Matrix> random_triangular_nsc(const Field& field, std::size_t rows, std::size_t cols, Rng& rng,
                                            int attempts) {
    for (int a = 0; a < attempts; ++a) {
        Matrix m(field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = r; c < cols; ++c) m(r, c) = random_nonzero(field, rng);
        if (is_nsc(m)) return m;
    }
    return std::nullopt;
}

} // namespace bsym
