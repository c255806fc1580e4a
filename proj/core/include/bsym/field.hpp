#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsym {

/// Element of GF(p^e) stored by its canonical integer encoding in [0, q).
///
/// For e > 1 the encoding is the base-p digit string of the polynomial-basis
/// coordinates: digit i is the coefficient of x^i.
struct FieldElement {
    std::uint16_t value = 0;

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Finite field GF(p^e) with log/antilog arithmetic.
///
/// A Field is a cheap handle to immutable shared tables; copies refer to the same
/// tables and all operations are safe to call concurrently. Two fields compare
/// equal iff they have the same (p, e).
class Field {
public:
    /// The field of order p^e. Extension fields use the canonical modulus, which is
    /// the smallest monic irreducible polynomial of degree e over GF(p) when its
    /// coefficients are read as a base-p integer (constant term least significant).
    static Field make(std::uint32_t p, std::uint32_t e = 1,
                      std::uint32_t max_order = kMaxFieldOrder);
    /// The field of order q, where q must be a prime power.
    static Field of_order(std::uint32_t q);
    /// Parses "q" or "p^e".
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// Coefficients of the monic modulus, constant term first; empty for prime fields.
    std::span<const std::uint32_t> modulus() const noexcept;

    FieldElement zero() const noexcept { return FieldElement{0}; }
    FieldElement one() const noexcept { return FieldElement{1}; }
    /// Element with canonical encoding `value`; throws DomainError when out of range.
    FieldElement element(std::uint32_t value) const;
    /// The image of the integer `n` under Z -> GF(p).
    FieldElement from_integer(std::int64_t n) const noexcept;
    bool contains(FieldElement a) const noexcept;

    FieldElement add(FieldElement a, FieldElement b) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept;
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement mul(FieldElement a, FieldElement b) const noexcept;
    /// Throws DomainError for a == 0.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t exponent) const noexcept;

    /// A fixed generator of the multiplicative group.
    FieldElement primitive_element() const noexcept;

    /// alpha_1 = 0 < alpha_2 < ... < alpha_q, ordered by canonical encoding.
    std::vector<FieldElement> elements_in_order() const;

    /// Row-major q*q addition table when q <= 256, empty otherwise.
    std::span<const std::uint16_t> addition_table() const noexcept;

    /// "p" for prime fields, "p^e" otherwise.
    std::string order_string() const;
    /// Polynomial rendering of an element ("x^2+2x+1", "0", ...).
    std::string format(FieldElement a) const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Tables;
    explicit Field(std::shared_ptr<const Tables> tables) : t_(std::move(tables)) {}
    std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility of a monic polynomial over GF(p), coefficients constant term first.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

} // namespace bsym
