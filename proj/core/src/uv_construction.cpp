#include "bsym/uv_construction.hpp"

#include "bsym/classify.hpp"
#include "bsym/error.hpp"

#include <algorithm>

namespace bsym {

UvSpec::UvSpec(LinearCode c1, LinearCode c2) : c1_(std::move(c1)), c2_(std::move(c2)) {
    if (!(c1_.field() == c2_.field())) throw DomainError("[u+v, u-v] constituents use different fields");
    if (c1_.length() != c2_.length()) throw DomainError("[u+v, u-v] constituents have different lengths");
    if (c1_.field().characteristic() == 2) throw DomainError("[u+v, u-v] construction needs odd characteristic");
    if (c1_.dimension() == 0 || c2_.dimension() == 0)
        throw DomainError("[u+v, u-v] constituents must be nonzero codes");
}

MatrixProductSpec UvSpec::as_matrix_product() const {
    return MatrixProductSpec({c1_, c2_}, uv_mixing_matrix(field()));
}

Matrix uv_mixing_matrix(const Field& field) {
    Matrix a(field, 2, 2);
    a(0, 0) = a(0, 1) = a(1, 0) = field.one();
    a(1, 1) = field.neg(field.one());
    return a;
}

LinearCode uv_construct(const UvSpec& spec) { return product_code(spec.as_matrix_product()); }

LinearCode intersection(const LinearCode& a, const LinearCode& b) {
    if (!(a.field() == b.field()) || a.length() != b.length())
        throw DomainError("intersection of codes over different fields or lengths");
    const Matrix& ha = a.parity_check();
    const Matrix& hb = b.parity_check();
    if (ha.rows() + hb.rows() == 0) return a;
    return LinearCode::from_parity_check(ha.stacked(hb));
}

LinearCode sum_zero_code(const Field& field, std::size_t n) {
    Matrix ones(field, 1, n);
    for (std::size_t c = 0; c < n; ++c) ones(0, c) = field.one();
    return LinearCode::from_parity_check(ones);
}

UvBounds uv_bounds(const UvSpec& spec, std::size_t b, const EnumerationOptions& options) {
    UvBounds r;
    r.b = b;
    r.d1 = min_b_distance(spec.c1(), b, options);
    r.d2 = min_b_distance(spec.c2(), b, options);
    r.lower_first = std::min(2 * r.d1, r.d2);
    r.lower_second = std::min(r.d1, 2 * r.d2);
    r.sandwich_lower = std::min(r.d1, r.d2);
    r.sandwich_upper = std::min(2 * r.d1, 2 * r.d2);

    const std::size_t n = spec.length();
    const std::size_t k1 = spec.c1().dimension(), k2 = spec.c2().dimension();
    const bool mds1 = singleton_class(n, k1, b, r.d1) == SingletonClass::Mds;
    const bool mds2 = singleton_class(n, k2, b, r.d2) == SingletonClass::Mds;
    if (mds1 && mds2 && b <= std::min(k1, k2)) r.mds_upper = r.d1 + r.d2 - b;

    const LinearCode both = intersection(spec.c1(), spec.c2());
    if (both.dimension() > 0) {
        for_each_projective_codeword(
            both,
            [&](std::span<const FieldElement> x) {
                if (b_weight(x, b) == r.sandwich_lower && has_boundary_hole(x, b)) {
                    r.equality_witness = Word(x.begin(), x.end());
                    return false;
                }
                return true;
            },
            options);
    }
    return r;
}

AmdsCertificate build_amds(const Field& field, std::size_t n, std::size_t b) {
    if (field.characteristic() == 2) throw DomainError("the AMDS construction needs odd characteristic");
    if (n < 3) throw DomainError("the AMDS construction needs n >= 3");
    // At b = n-1 the sum-zero code still has d_b = n = b+1, so the certificate holds there too.
    if (b < 1 || b + 1 > n) throw DomainError("the AMDS construction needs 1 <= b <= n-1");

    const LinearCode c = sum_zero_code(field, n);
    const UvSpec spec(c, c);
    const MatrixProductSpec mp = spec.as_matrix_product();

    // d_b(sum-zero) = b + 1: it has no weight-1 word, so the codimension-1 profile applies.
    const Classification cls = classify_codim1(c);
    const std::size_t db = cls.predicted.at(b - 1);

    Word x(n, field.zero());
    x[0] = field.one();
    x[1] = field.neg(field.one());

    AmdsCertificate cert{field, n, b, product_code(mp), x, encode(mp, std::vector<Word>{x, x}), 0, db, 0, 0, false};
    cert.upper_weight = b_weight(cert.upper_witness, b);
    cert.lower_bound = std::min(db, 2 * db);
    cert.target = singleton_bound(2 * n, 2 * n - 2, b) - 1;
    cert.witness_in_code = cert.code.contains(cert.upper_witness);
    return cert;
}

} // namespace bsym
