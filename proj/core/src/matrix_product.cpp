#include "bsym/matrix_product.hpp"

#include "bsym/error.hpp"
#include "bsym/linalg.hpp"

#include <algorithm>
#include <limits>

namespace bsym {

MatrixProductSpec::MatrixProductSpec(std::vector<LinearCode> constituents, Matrix mixing)
    : constituents_(std::move(constituents)), mixing_(std::move(mixing)) {
    if (constituents_.empty()) throw DomainError("matrix product code needs at least one constituent");
    if (mixing_.rows() != constituents_.size())
        throw DomainError("mixing matrix has " + std::to_string(mixing_.rows()) + " rows for " +
                          std::to_string(constituents_.size()) + " constituents");
    if (mixing_.rows() > mixing_.cols()) throw DomainError("mixing matrix needs M <= N");
    const std::size_t n = constituents_.front().length();
    for (const auto& c : constituents_) {
        if (!(c.field() == mixing_.field())) throw DomainError("constituents and mixing matrix use different fields");
        if (c.length() != n) throw DomainError("constituents have different lengths");
        if (c.dimension() == 0) throw DomainError("constituent codes must be nonzero");
    }
    if (rank(mixing_) != mixing_.rows()) throw DomainError("mixing matrix is not of full row rank");
}

Matrix product_generator_matrix(const MatrixProductSpec& spec) {
    const Field& f = spec.field();
    const std::size_t n = spec.block_length();
    std::size_t k = 0;
    for (const auto& c : spec.constituents()) k += c.dimension();
    Matrix g(f, k, n * spec.columns());
    std::size_t row = 0;
    for (std::size_t l = 0; l < spec.rows(); ++l) {
        const Matrix& gl = spec.constituent(l).generator();
        for (std::size_t r = 0; r < gl.rows(); ++r, ++row)
            for (std::size_t j = 0; j < spec.columns(); ++j) {
                const FieldElement a = spec.mixing()(l, j);
                for (std::size_t c = 0; c < n; ++c) g(row, j * n + c) = f.mul(a, gl(r, c));
            }
    }
    return g;
}

LinearCode product_code(const MatrixProductSpec& spec) {
    return LinearCode::from_generator(product_generator_matrix(spec));
}

Word encode(const MatrixProductSpec& spec, std::span<const Word> parts) {
    if (parts.size() != spec.rows()) throw DomainError("one word per constituent expected");
    const Field& f = spec.field();
    const std::size_t n = spec.block_length();
    for (std::size_t l = 0; l < parts.size(); ++l)
        if (!spec.constituent(l).contains(parts[l]))
            throw DomainError("word " + std::to_string(l + 1) + " is not a codeword of its constituent");
    Word out(n * spec.columns());
    for (std::size_t j = 0; j < spec.columns(); ++j)
        for (std::size_t l = 0; l < spec.rows(); ++l) {
            const FieldElement a = spec.mixing()(l, j);
            if (a.value == 0) continue;
            for (std::size_t c = 0; c < n; ++c) out[j * n + c] = f.add(out[j * n + c], f.mul(a, parts[l][c]));
        }
    return out;
}

Matrix delta(const Field& field, std::span<const FieldElement> codeword, std::size_t n, std::size_t blocks) {
    if (codeword.size() != n * blocks) throw DomainError("codeword length is not n * N");
    Matrix m(field, n, blocks);
    for (std::size_t j = 0; j < blocks; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = codeword[j * n + i];
    return m;
}

namespace {

std::size_t hamming_distance_of_rows(const Matrix& rows) {
    return min_b_distances(LinearCode::from_generator(rows), EnumerationOptions{.cap = ~std::uint64_t{0}, .workers = 1})
        .front();
}

void check_distances(const MatrixProductSpec& spec, std::span<const std::size_t> db) {
    if (db.size() != spec.rows()) throw DomainError("one constituent distance per row of A expected");
}

} // namespace

std::vector<std::size_t> leading_row_distances(const Matrix& mixing) {
    std::vector<std::size_t> t;
    for (std::size_t i = 1; i <= mixing.rows(); ++i) t.push_back(hamming_distance_of_rows(mixing.top_rows(i)));
    return t;
}

std::vector<std::size_t> trailing_row_distances(const Matrix& mixing) {
    std::vector<std::size_t> s;
    for (std::size_t i = 1; i <= mixing.rows(); ++i) s.push_back(hamming_distance_of_rows(mixing.bottom_rows(i)));
    return s;
}

std::vector<std::size_t> constituent_distances(const MatrixProductSpec& spec, std::size_t b,
                                               const EnumerationOptions& options) {
    std::vector<std::size_t> out;
    for (const auto& c : spec.constituents()) out.push_back(min_b_distance(c, b, options));
    return out;
}

std::size_t lower_bound_first_rows(const MatrixProductSpec& spec, std::span<const std::size_t> db) {
    check_distances(spec, db);
    const auto t = leading_row_distances(spec.mixing());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < db.size(); ++i) best = std::min(best, t[i] * db[i]);
    return best;
}

std::size_t lower_bound_last_rows(const MatrixProductSpec& spec, std::span<const std::size_t> db) {
    check_distances(spec, db);
    const auto s = trailing_row_distances(spec.mixing());
    const std::size_t m = spec.rows();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < m; ++i) best = std::min(best, s[m - i - 1] * db[i]);
    return best;
}

std::optional<std::size_t> lower_bound_nsc(const MatrixProductSpec& spec, std::span<const std::size_t> db) {
    check_distances(spec, db);
    if (!is_nsc(spec.mixing())) return std::nullopt;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < db.size(); ++i) best = std::min(best, (spec.columns() - i) * db[i]);
    return best;
}

UpperBoundReport upper_bound_triangular_nsc(const MatrixProductSpec& spec, std::size_t b,
                                            std::span<const std::size_t> db, const EnumerationOptions& options) {
    check_distances(spec, db);
    if (!is_upper_triangular(spec.mixing())) throw DomainError("mixing matrix is not upper triangular");
    if (!is_nsc(spec.mixing())) throw DomainError("mixing matrix is not NSC");
    const std::size_t big_n = spec.columns();

    UpperBoundReport report;
    report.upper = big_n * db[0];
    report.lower = big_n * db[0];
    for (std::size_t i = 1; i < db.size(); ++i) {
        report.upper = std::min(report.upper, (big_n - i) * db[i] + b - 1);
        report.lower = std::min(report.lower, (big_n - i) * db[i]);
    }

    if (report.lower == big_n * db[0]) {
        report.certificate = EqualityCertificate::FirstConstituent;
        report.certified = report.lower;
        return report;
    }
    for (std::size_t i = 1; i < db.size(); ++i) {
        if ((big_n - i) * db[i] != report.lower) continue;
        if (codeword_count(spec.constituent(i)) > options.cap) continue;
        std::optional<Word> found;
        for_each_projective_codeword(
            spec.constituent(i),
            [&](std::span<const FieldElement> w) {
                if (b_weight(w, b) == db[i] && has_boundary_hole(w, b)) {
                    found = Word(w.begin(), w.end());
                    return false;
                }
                return true;
            },
            options);
        if (found) {
            report.certificate = EqualityCertificate::BoundaryHoleWitness;
            report.certified = report.lower;
            report.witness_constituent = i;
            report.witness = std::move(found);
            return report;
        }
    }
    return report;
}

std::size_t BoundReport::best_lower() const noexcept {
    return std::max({lower_first_rows, lower_last_rows, lower_nsc.value_or(0)});
}

bool BoundReport::tight() const noexcept { return exact && *exact == best_lower(); }

BoundReport analyze_bounds(const MatrixProductSpec& spec, std::size_t b, bool with_exact,
                           const EnumerationOptions& options) {
    const auto db = constituent_distances(spec, b, options);
    BoundReport r;
    r.b = b;
    r.lower_first_rows = lower_bound_first_rows(spec, db);
    r.lower_last_rows = lower_bound_last_rows(spec, db);
    r.lower_nsc = lower_bound_nsc(spec, db);
    if (r.lower_nsc && is_upper_triangular(spec.mixing()))
        r.upper = upper_bound_triangular_nsc(spec, b, db, options);
    if (with_exact) {
        const LinearCode code = product_code(spec);
        if (codeword_count(code) <= options.cap) r.exact = min_b_distance(code, b, options);
    }
    return r;
}

} // namespace bsym
