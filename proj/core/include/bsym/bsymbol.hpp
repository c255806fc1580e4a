#pragma once

#include "bsym/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

// b-symbol metric on GF(q)^n.
//
// Positions are 0-based and every window and hole wraps around cyclically:
// position n-1 is followed by position 0.

namespace bsym {

using Word = std::vector<FieldElement>;

/// Maximal cyclic run of positions outside a support set, flanked on both sides by the set.
struct Hole {
    std::size_t start = 0; ///< first position of the run
    std::size_t size = 0;

    friend bool operator==(const Hole&, const Hole&) = default;
};

struct HoleSet {
    std::size_t length = 0;
    std::vector<std::size_t> support; ///< sorted, distinct
    std::vector<Hole> holes;          ///< ordered by start position

    /// Whether the hole covers position `i`.
    static bool covers(const Hole& h, std::size_t i, std::size_t length) noexcept {
        return (i + length - h.start) % length < h.size;
    }
};

/// Positions i such that the window (x_i, ..., x_{i+b-1}) is nonzero.
std::vector<std::size_t> b_support(std::span<const FieldElement> x, std::size_t b);

std::size_t hamming_weight(std::span<const FieldElement> x) noexcept;

/// Number of nonzero length-b windows of x. Throws DomainError unless 1 <= b <= n.
std::size_t b_weight(std::span<const FieldElement> x, std::size_t b);

std::size_t b_distance(const Field& field, std::span<const FieldElement> x, std::span<const FieldElement> y,
                       std::size_t b);

/// w_1, ..., w_n of x in one O(n) pass (entry b-1 holds w_b).
std::vector<std::size_t> b_weight_profile(std::span<const FieldElement> x);

/// Holes of the support set J inside Z_n. Empty when J is empty or all of Z_n.
HoleSet holes(std::span<const std::size_t> support, std::size_t n);

/// Hamming support of x.
std::vector<std::size_t> hamming_support(std::span<const FieldElement> x);

/// w_b computed from the holes of the Hamming support:
/// w_1(x) + sum over holes of min(|H|, b-1).
std::size_t b_weight_via_holes(std::span<const FieldElement> x, std::size_t b);

/// At most one hole.
bool is_successive(std::span<const std::size_t> support, std::size_t n);

/// Whether some hole of the Hamming support of x has size >= b-1 and contains
/// position 0 or position n-1.
bool has_boundary_hole(std::span<const FieldElement> x, std::size_t b);

} // namespace bsym
