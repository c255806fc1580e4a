#include "bsym/linalg.hpp"

#include "bsym/error.hpp"

#include <algorithm>
#include <numeric>

namespace bsym {

namespace {

// row[target] -= factor * row[source], from column `from` on.
void eliminate(Matrix& m, std::size_t target, std::size_t source, FieldElement factor, std::size_t from) {
    const Field& f = m.field();
    auto dst = m.row(target);
    auto src = m.row(source);
    for (std::size_t c = from; c < m.cols(); ++c)
        if (src[c].value != 0) dst[c] = f.sub(dst[c], f.mul(factor, src[c]));
}

void scale_row(Matrix& m, std::size_t r, FieldElement factor) {
    const Field& f = m.field();
    for (auto& x : m.row(r)) x = f.mul(x, factor);
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(m.row(a).begin(), m.row(a).end(), m.row(b).begin());
}

} // namespace

EchelonForm reduced_echelon(const Matrix& a) {
    Matrix m = a;
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).value == 0) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, r, p);
        scale_row(m, r, f.inv(m(r, c)));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m(i, c).value != 0) eliminate(m, i, r, m(i, c), c);
        pivots.push_back(c);
        ++r;
    }
    return {m.top_rows(r), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return reduced_echelon(a).pivots.size(); }

Matrix kernel_basis(const Matrix& a) {
    const auto [rref, pivots] = reduced_echelon(a);
    const Field& f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    Matrix basis(f, a.cols() - pivots.size(), a.cols());
    std::size_t out = 0;
    for (std::size_t freec = 0; freec < a.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        basis(out, freec) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = f.neg(rref(i, freec));
        ++out;
    }
    return basis;
}

FieldElement determinant(const Matrix& a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
    Matrix m = a;
    const Field& f = m.field();
    FieldElement det = f.one();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (p < m.rows() && m(p, c).value == 0) ++p;
        if (p == m.rows()) return f.zero();
        if (p != c) {
            swap_rows(m, c, p);
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const FieldElement pivot_inv = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < m.rows(); ++i)
            if (m(i, c).value != 0) eliminate(m, i, c, f.mul(m(i, c), pivot_inv), c);
    }
    return det;
}

bool is_nsc(const Matrix& a) {
    if (a.rows() > a.cols()) throw DomainError("NSC check needs rows <= cols");
    const std::size_t n = a.cols();
    for (std::size_t t = 1; t <= a.rows(); ++t) {
        const Matrix top = a.top_rows(t);
        std::vector<std::size_t> cols(t);
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        while (true) {
            if (determinant(top.select_columns(cols)).value == 0) return false;
            // next t-combination of {0..n-1} in lexicographic order
            std::size_t i = t;
            while (i > 0 && cols[i - 1] == n - t + i - 1) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (std::size_t j = i; j < t; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
    return true;
}

bool is_upper_triangular(const Matrix& a) {
    for (std::size_t i = 1; i < a.rows(); ++i)
        for (std::size_t j = 0; j < std::min(i, a.cols()); ++j)
            if (a(i, j).value != 0) return false;
    return true;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || !(a.field() == b.field())) return false;
    return reduced_echelon(a).reduced == reduced_echelon(b).reduced;
}

} // namespace bsym
