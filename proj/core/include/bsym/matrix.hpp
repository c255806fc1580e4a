#pragma once

#include "bsym/field.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bsym {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Builds a matrix from canonical integer encodings; all rows must have equal length.
    static Matrix from_values(Field field, const std::vector<std::vector<std::uint32_t>>& rows);
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<FieldElement>>& rows);
    static Matrix identity(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    FieldElement operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    FieldElement& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const FieldElement> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<FieldElement> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    Matrix transpose() const;
    Matrix select_rows(std::span<const std::size_t> indices) const;
    Matrix select_columns(std::span<const std::size_t> indices) const;
    /// First `count` rows.
    Matrix top_rows(std::size_t count) const;
    /// Last `count` rows.
    Matrix bottom_rows(std::size_t count) const;
    /// Rows of this matrix followed by rows of `below`.
    Matrix stacked(const Matrix& below) const;
    bool is_zero() const noexcept;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

/// x * M for a row vector x.
std::vector<FieldElement> row_times(std::span<const FieldElement> x, const Matrix& m);

} // namespace bsym
