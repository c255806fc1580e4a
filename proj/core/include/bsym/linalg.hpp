#pragma once

#include "bsym/matrix.hpp"

#include <cstddef>
#include <vector>

namespace bsym {

struct EchelonForm {
    Matrix reduced;                   ///< reduced row echelon form, zero rows removed
    std::vector<std::size_t> pivots;  ///< pivot column of each row of `reduced`
};

EchelonForm reduced_echelon(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of { x : A x^T = 0 } as the rows of a (cols - rank) x cols matrix.
Matrix kernel_basis(const Matrix& a);

/// Throws DomainError for non-square input.
FieldElement determinant(const Matrix& a);

/// Whether every t x t submatrix built from the first t rows is nonsingular, for all t.
/// Enumerates all sum_t C(N, t) minors; throws DomainError when rows > cols.
bool is_nsc(const Matrix& a);

/// a(i, j) == 0 whenever i > j.
bool is_upper_triangular(const Matrix& a);

/// Row-space equality, decided by comparing reduced echelon forms.
bool same_row_space(const Matrix& a, const Matrix& b);

} // namespace bsym
