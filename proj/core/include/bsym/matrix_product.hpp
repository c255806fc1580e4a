#pragma once

#include "bsym/distance.hpp"
#include "bsym/linear_code.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bsym {

/// Constituents C_1..C_M of common length n and an M x N mixing matrix A of rank M.
///
/// Codewords of [C_1, ..., C_M] . A are the concatenated blocks
/// sum_l c_l a(l, j) for j = 1..N, each block of length n.
class MatrixProductSpec {
public:
    /// Throws DomainError unless all constituents share field and length, are nonzero,
    /// and A has M rows, rank M and M <= N.
    MatrixProductSpec(std::vector<LinearCode> constituents, Matrix mixing);

    const std::vector<LinearCode>& constituents() const noexcept { return constituents_; }
    const LinearCode& constituent(std::size_t i) const { return constituents_.at(i); }
    const Matrix& mixing() const noexcept { return mixing_; }
    const Field& field() const noexcept { return mixing_.field(); }
    std::size_t block_length() const noexcept { return constituents_.front().length(); }
    std::size_t rows() const noexcept { return mixing_.rows(); }
    std::size_t columns() const noexcept { return mixing_.cols(); }

private:
    std::vector<LinearCode> constituents_;
    Matrix mixing_;
};

/// The block generator with blocks a(l, j) G_l; rows are grouped by constituent.
Matrix product_generator_matrix(const MatrixProductSpec& spec);

/// The product code; its dimension is the sum of the constituent dimensions.
LinearCode product_code(const MatrixProductSpec& spec);

/// [c_1, ..., c_M] . A. Throws DomainError if some c_l is not in C_l.
Word encode(const MatrixProductSpec& spec, std::span<const Word> parts);

/// The n x N matrix whose column j is block j of `codeword`.
Matrix delta(const Field& field, std::span<const FieldElement> codeword, std::size_t n, std::size_t blocks);

/// Minimum Hamming distances t_1..t_M of the codes spanned by the first i rows of A.
std::vector<std::size_t> leading_row_distances(const Matrix& mixing);

/// Minimum Hamming distances s_1..s_M of the codes spanned by the last i rows of A.
std::vector<std::size_t> trailing_row_distances(const Matrix& mixing);

/// d_b(C_1), ..., d_b(C_M). 1 <= b <= n.
std::vector<std::size_t> constituent_distances(const MatrixProductSpec& spec, std::size_t b,
                                               const EnumerationOptions& options = {});

/// min_i t_i d_b(C_i)
std::size_t lower_bound_first_rows(const MatrixProductSpec& spec, std::span<const std::size_t> constituent_db);

/// min_i s_{M-i+1} d_b(C_i)
std::size_t lower_bound_last_rows(const MatrixProductSpec& spec, std::span<const std::size_t> constituent_db);

/// min_i (N-i+1) d_b(C_i) when A is NSC, nullopt otherwise.
std::optional<std::size_t> lower_bound_nsc(const MatrixProductSpec& spec,
                                           std::span<const std::size_t> constituent_db);

enum class EqualityCertificate {
    FirstConstituent,   ///< d* = N d_b(C_1)
    BoundaryHoleWitness, ///< a minimum-weight word of C_i0 has a boundary hole of size >= b-1
    Inconclusive,
};

struct UpperBoundReport {
    std::size_t upper = 0;               ///< min{N d_b(C_1), (N-i+1) d_b(C_i) + b - 1}
    std::size_t lower = 0;               ///< d* = min (N-i+1) d_b(C_i)
    EqualityCertificate certificate = EqualityCertificate::Inconclusive;
    std::optional<std::size_t> certified; ///< d_b(C) = d* when certified
    std::optional<std::size_t> witness_constituent; ///< 0-based i0 of the hole witness
    std::optional<Word> witness;         ///< constituent word behind BoundaryHoleWitness
};

/// Upper bound and equality certificates for upper triangular NSC mixing matrices.
/// Throws DomainError when A is not upper triangular or not NSC.
UpperBoundReport upper_bound_triangular_nsc(const MatrixProductSpec& spec, std::size_t b,
                                            std::span<const std::size_t> constituent_db,
                                            const EnumerationOptions& options = {});

struct BoundReport {
    std::size_t b = 0;
    std::size_t lower_first_rows = 0;
    std::size_t lower_last_rows = 0;
    std::optional<std::size_t> lower_nsc;
    std::optional<UpperBoundReport> upper;
    std::optional<std::size_t> exact;

    std::size_t best_lower() const noexcept;
    /// Exact value known and equal to the best lower bound.
    bool tight() const noexcept;
};

/// All bounds at `b`; the exact d_b(C) is filled in when `with_exact` and the product
/// code is enumerable under `options`.
BoundReport analyze_bounds(const MatrixProductSpec& spec, std::size_t b, bool with_exact = true,
                           const EnumerationOptions& options = {});

} // namespace bsym
