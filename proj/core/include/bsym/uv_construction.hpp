#pragma once

#include "bsym/distance.hpp"
#include "bsym/matrix_product.hpp"

#include <cstddef>
#include <optional>

namespace bsym {

/// Two nonzero codes of equal length over a field of odd characteristic, combined as
/// { [u+v, u-v] : u in C1, v in C2 }.
class UvSpec {
public:
    UvSpec(LinearCode c1, LinearCode c2);

    const LinearCode& c1() const noexcept { return c1_; }
    const LinearCode& c2() const noexcept { return c2_; }
    const Field& field() const noexcept { return c1_.field(); }
    std::size_t length() const noexcept { return c1_.length(); }
    MatrixProductSpec as_matrix_product() const;

private:
    LinearCode c1_;
    LinearCode c2_;
};

/// [[1, 1], [1, -1]]
Matrix uv_mixing_matrix(const Field& field);

/// The [2n, k1 + k2] code.
LinearCode uv_construct(const UvSpec& spec);

/// C1 intersected with C2, as the kernel of the stacked parity-check matrices.
LinearCode intersection(const LinearCode& a, const LinearCode& b);

/// The [n, n-1] code of words whose coordinates sum to zero.
LinearCode sum_zero_code(const Field& field, std::size_t n);

struct UvBounds {
    std::size_t b = 0;
    std::size_t d1 = 0; ///< d_b(C1)
    std::size_t d2 = 0; ///< d_b(C2)
    std::size_t lower_first = 0;    ///< min{2 d_b(C1), d_b(C2)}
    std::size_t lower_second = 0;   ///< min{d_b(C1), 2 d_b(C2)}
    std::size_t sandwich_lower = 0; ///< min{d_b(C1), d_b(C2)}
    std::size_t sandwich_upper = 0; ///< min{2 d_b(C1), 2 d_b(C2)}
    /// d_b(C1) + d_b(C2) - b when both constituents are b-symbol MDS and b <= min(k1, k2).
    std::optional<std::size_t> mds_upper;
    /// Word x in C1 and C2 of b-weight min{d_b(C1), d_b(C2)} with a boundary hole of size >= b-1.
    std::optional<Word> equality_witness;

    std::size_t lower() const noexcept { return std::max(lower_first, lower_second); }
    std::size_t upper() const noexcept { return mds_upper ? std::min(*mds_upper, sandwich_upper) : sandwich_upper; }
    /// d_b(C) when the equality witness exists.
    std::optional<std::size_t> certified() const noexcept {
        return equality_witness ? std::optional(sandwich_lower) : std::nullopt;
    }
};

/// Bounds on d_b of the [u+v, u-v] code from exact constituent distances; the witness
/// search runs over C1 and C2's intersection and needs it to be enumerable.
UvBounds uv_bounds(const UvSpec& spec, std::size_t b, const EnumerationOptions& options = {});

struct AmdsCertificate {
    Field field;
    std::size_t n = 0;        ///< constituent length; the code has length 2n
    std::size_t b = 0;
    LinearCode code;          ///< the [2n, 2n-2] code
    Word x;                   ///< (1, -1, 0, ..., 0), in both constituents
    Word upper_witness;       ///< [2x, 0] = [x + x, x - x]
    std::size_t upper_weight = 0;     ///< w_b(upper_witness)
    std::size_t constituent_db = 0;   ///< d_b of the sum-zero code from its classification
    std::size_t lower_bound = 0;      ///< min{d_b(C1), 2 d_b(C2)}
    std::size_t target = 0;           ///< min{n' - k + b, n'} - 1 with n' = 2n, k = 2n-2
    bool witness_in_code = false;

    /// Both sides meet the AMDS target and the witness lies in the code.
    bool valid() const noexcept {
        return witness_in_code && code.dimension() + 2 == 2 * n && upper_weight == target && lower_bound == target;
    }
    std::size_t d_b() const noexcept { return upper_weight; }
};

/// [2n, 2n-2] b-symbol AMDS code from two copies of the sum-zero code, certified
/// without enumeration. Requires odd characteristic, n >= 3 and 1 <= b <= n-1.
AmdsCertificate build_amds(const Field& field, std::size_t n, std::size_t b);

} // namespace bsym
