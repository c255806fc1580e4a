#pragma once

#include "bsym/linear_code.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace bsym {

/// Which closed-form profile a codimension-1 or codimension-2 code falls into.
///
/// Codimension 1:  A: d_b = b+1 (MDS),  B: d_b = b (AMDS).
/// Codimension 2:  A: d_1 = 1, d_b = b
///                 B: d_1 = 2 with an adjacent weight-2 word, d_b = b+1 (AMDS)
///                 C: d_1 = 2, no adjacent weight-2 word, d_b = min{b+2, n} for b >= 2
///                 D: d_1 = 3, d_b = min{b+2, n} (MDS)
enum class ProfileCase { A, B, C, D };

char case_letter(ProfileCase c) noexcept;

struct Classification {
    std::size_t codimension = 0;
    ProfileCase profile_case = ProfileCase::A;
    std::size_t hamming_distance = 0;
    /// Predicted d_1..d_n (entry b-1); d_n = n is appended for b = n.
    std::vector<std::size_t> predicted;
    /// Support of a weight-1 or weight-2 codeword found by the column scan (0-based).
    std::optional<std::pair<std::size_t, std::size_t>> low_weight_support;
};

/// Requires k = n-1 and n >= 2; decided from zero columns of the parity-check matrix.
Classification classify_codim1(const LinearCode& code);

/// Requires k = n-2 and n >= 3; weight-1 and weight-2 codewords come from a scan of
/// single columns and column pairs of the parity-check matrix, so no enumeration of
/// the code is needed.
Classification classify_codim2(const LinearCode& code);

/// Dispatches on n - k; throws DomainError for other codimensions.
Classification classify(const LinearCode& code);

enum class ExampleFamily { H1, H2, H3, H4, H5 };

ExampleFamily parse_example_family(std::string_view tag);
std::string_view to_string(ExampleFamily family) noexcept;

/// The case each family is known to land in.
ProfileCase expected_case(ExampleFamily family) noexcept;

/// 2 x n parity-check matrix of the family.
///   H1: unit vectors e_1, e_2 (n >= 3)
///   H2: (1,1,0,...,0) and (0,0,1,...,1) (n >= 4)
///   H3: alternating (1,0,1,0,...) and (0,1,0,1,...) (n even, n >= 4)
///   H4: H3 on the first n-1 columns, last column (1,1) (n odd, n >= 5)
///   H5: all ones over the first n field elements in order (3 <= n <= q)
Matrix example_parity_check(ExampleFamily family, const Field& field, std::size_t n);

LinearCode example_family(ExampleFamily family, const Field& field, std::size_t n);

} // namespace bsym
