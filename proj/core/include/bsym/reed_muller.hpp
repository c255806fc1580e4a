#pragma once

#include "bsym/linear_code.hpp"
#include "bsym/matrix_product.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bsym {

inline constexpr std::uint64_t kMaxReedMullerLength = std::uint64_t{1} << 20;
/// Refuse to materialise generator matrices with more entries than this.
inline constexpr std::uint64_t kMaxGeneratorEntries = std::uint64_t{1} << 26;

/// Generalized Reed-Muller code RM_q(r, m): evaluations of polynomials of total degree
/// <= r in m variables at all points of GF(q)^m in lexicographic order.
/// Negative r denotes the zero code.
struct RMParams {
    Field field;
    int r = 0;
    std::size_t m = 0;

    /// q^m; throws CapExceeded past kMaxReedMullerLength.
    std::size_t length() const;
    /// r = t(q-1) + s with 0 <= s < q-1 (r >= 0).
    int t() const;
    int s() const;
    /// r >= m(q-1)
    bool is_full_space() const noexcept;
};

/// All q^m points of GF(q)^m; the first coordinate is the most significant, so
/// P_1 = 0 < P_2 < ... in lexicographic order.
std::vector<Word> point_order(const Field& field, std::size_t m);

/// Number of reduced monomials (exponents < q) of total degree <= r.
std::size_t rm_dimension(const RMParams& params);

/// Generator rows are the evaluation vectors of the reduced monomials of degree <= r.
LinearCode rm_by_evaluation(const RMParams& params);

/// The q x q matrix of field binomials binom(alpha_j, alpha_i) (row i, column j), which is
/// upper triangular with unit diagonal.
Matrix gq_matrix(const Field& field);

/// [RM(r, m-1), RM(r-1, m-1), ..., RM(r-q+1, m-1)] . G_q with the zero constituents and
/// their rows of G_q dropped. Requires m >= 1 and r >= 0.
MatrixProductSpec rm_recursion_spec(const RMParams& params);

/// RM_q(r, m) built through the matrix-product recursion down to m = 0.
LinearCode rm_by_recursion(const RMParams& params);

/// (q-s) q^(m-t-1); 1 for the full space. Throws DomainError for r < 0.
std::size_t rm_d1(const RMParams& params);

/// min{d_1 + b - 1, q^m}
std::size_t rm_db(const RMParams& params, std::size_t b);

/// A minimum Hamming weight codeword whose support is successive and avoids the first
/// position unless it is everything.
Word rm_successive_witness(const RMParams& params);

enum class RmMdsReason { OneSymbolMds, LargeB, NotMds };

struct RmMdsVerdict {
    bool mds = false;
    RmMdsReason reason = RmMdsReason::NotMds;
};

/// b-symbol MDS iff RM is 1-symbol MDS or b >= q^m - d_1 + 1.
RmMdsVerdict rm_is_b_mds(const RMParams& params, std::size_t b);

} // namespace bsym
