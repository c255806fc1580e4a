#pragma once

#include "bsym/bsymbol.hpp"
#include "bsym/matrix.hpp"

#include <cstddef>
#include <memory>
#include <span>

namespace bsym {

/// An [n, k]_q linear code held by its generator in reduced row echelon form.
///
/// The parity-check matrix is computed on first use and shared between copies.
class LinearCode {
public:
    /// Row space of `generator`; dependent rows are dropped.
    static LinearCode from_generator(const Matrix& generator);
    /// Kernel of `parity_check`.
    static LinearCode from_parity_check(const Matrix& parity_check);
    static LinearCode full_space(const Field& field, std::size_t n);
    static LinearCode zero_code(const Field& field, std::size_t n);

    const Field& field() const noexcept { return generator_.field(); }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    const Matrix& generator() const noexcept { return generator_; }
    /// Pivot column of each generator row.
    std::span<const std::size_t> information_set() const noexcept { return pivots_; }
    const Matrix& parity_check() const;

    /// message * G for a length-k message.
    Word encode(std::span<const FieldElement> message) const;
    bool contains(std::span<const FieldElement> word) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b);

private:
    LinearCode(Matrix generator, std::vector<std::size_t> pivots);

    struct ParityCache;
    Matrix generator_;
    std::vector<std::size_t> pivots_;
    std::shared_ptr<ParityCache> parity_;
};

} // namespace bsym
