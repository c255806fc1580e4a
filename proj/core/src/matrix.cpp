#include "bsym/matrix.hpp"

#include "bsym/error.hpp"

#include <algorithm>
#include <string>

namespace bsym {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_values(Field field, const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.element(rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<FieldElement>>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
    Matrix m(field_, indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= rows_) throw DomainError("row index out of range");
        std::copy_n(row(indices[i]).begin(), cols_, m.row(i).begin());
    }
    return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
    Matrix m(field_, rows_, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= cols_) throw DomainError("column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, indices[j]);
    }
    return m;
}

Matrix Matrix::top_rows(std::size_t count) const {
    Matrix m(field_, std::min(count, rows_), cols_);
    std::copy_n(data_.begin(), m.data_.size(), m.data_.begin());
    return m;
}

Matrix Matrix::bottom_rows(std::size_t count) const {
    count = std::min(count, rows_);
    Matrix m(field_, count, cols_);
    std::copy(data_.end() - static_cast<std::ptrdiff_t>(count * cols_), data_.end(), m.data_.begin());
    return m;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (below.cols_ != cols_ || !(below.field_ == field_))
        throw DomainError("cannot stack matrices of different shape or field");
    Matrix m(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](FieldElement x) { return x.value == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) throw DomainError("matrix product shape mismatch");
    const Field& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const FieldElement s = a(i, l);
            if (s.value == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(s, b(l, j)));
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<FieldElement> row_times(std::span<const FieldElement> x, const Matrix& m) {
    if (x.size() != m.rows()) throw DomainError("vector length does not match matrix rows");
    const Field& f = m.field();
    std::vector<FieldElement> out(m.cols());
    for (std::size_t l = 0; l < x.size(); ++l) {
        if (x[l].value == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(x[l], m(l, j)));
    }
    return out;
}

} // namespace bsym
