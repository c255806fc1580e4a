#pragma once

#include "bsym/linear_code.hpp"

#include <cstdint>
#include <optional>
#include <random>

// Reproducible random instances. Draws use `rng() % bound` rather than the standard
// distributions so that a seed produces the same instances on every standard library.

namespace bsym {

using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t bound);
FieldElement random_element(const Field& field, Rng& rng);
FieldElement random_nonzero(const Field& field, Rng& rng);
Word random_word(const Field& field, std::size_t n, Rng& rng);

/// Uniform among matrices of full row rank (rejection sampling); needs rows <= cols.
Matrix random_full_rank(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
LinearCode random_code(const Field& field, std::size_t n, std::size_t k, Rng& rng);
/// Random code of dimension n - r given by a random full-rank r x n parity check.
LinearCode random_code_by_parity(const Field& field, std::size_t n, std::size_t r, Rng& rng);

/// Rows x^0 .. x^{rows-1} evaluated at `cols` distinct random points; NSC. Needs cols <= q.
Matrix random_vandermonde(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
/// Upper-triangular NSC matrix, or nothing if `attempts` draws all fail.
std::optional<Matrix> random_triangular_nsc(const Field& field, std::size_t rows, std::size_t cols, Rng& rng,
                                            int attempts = 200);

} // namespace bsym
