#include "bsym/classify.hpp"

#include "bsym/error.hpp"
#include "bsym/linalg.hpp"

#include <algorithm>
#include <array>

namespace bsym {

namespace {

bool zero_column(const Matrix& h, std::size_t c) {
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (h(r, c).value != 0) return false;
    return true;
}

bool cyclically_adjacent(std::size_t i, std::size_t j, std::size_t n) {
    return j == i + 1 || (i == 0 && j == n - 1);
}

std::vector<std::size_t> predicted_profile(ProfileCase c, std::size_t codim, std::size_t n) {
    std::vector<std::size_t> d(n);
    for (std::size_t b = 1; b <= n; ++b) {
        std::size_t v = 0;
        switch (c) {
        case ProfileCase::A: v = codim == 1 ? b + 1 : b; break;
        case ProfileCase::B: v = codim == 1 ? b : b + 1; break;
        case ProfileCase::C: v = b == 1 ? 2 : b + 2; break;
        case ProfileCase::D: v = b + 2; break;
        }
        d[b - 1] = std::min(v, n);
    }
    return d;
}

} // namespace

char case_letter(ProfileCase c) noexcept { return static_cast<char>('a' + static_cast<int>(c)); }

Classification classify_codim1(const LinearCode& code) {
    const std::size_t n = code.length();
    if (n < 2 || code.dimension() + 1 != n) throw DomainError("classify_codim1 needs an [n, n-1] code with n >= 2");
    const Matrix& h = code.parity_check();
    Classification out;
    out.codimension = 1;
    for (std::size_t c = 0; c < n; ++c)
        if (zero_column(h, c)) {
            out.low_weight_support = std::pair{c, c};
            break;
        }
    out.profile_case = out.low_weight_support ? ProfileCase::B : ProfileCase::A;
    out.hamming_distance = out.low_weight_support ? 1 : 2;
    out.predicted = predicted_profile(out.profile_case, 1, n);
    return out;
}

Classification classify_codim2(const LinearCode& code) {
    const std::size_t n = code.length();
    if (n < 3 || code.dimension() + 2 != n) throw DomainError("classify_codim2 needs an [n, n-2] code with n >= 3");
    const Matrix& h = code.parity_check();
    Classification out;
    out.codimension = 2;

    for (std::size_t c = 0; c < n && !out.low_weight_support; ++c)
        if (zero_column(h, c)) out.low_weight_support = std::pair{c, c};
    if (out.low_weight_support) {
        out.profile_case = ProfileCase::A;
        out.hamming_distance = 1;
    } else {
        // Columns i, j support a weight-2 codeword iff they are linearly dependent.
        std::optional<std::pair<std::size_t, std::size_t>> any_pair, adjacent_pair;
        for (std::size_t i = 0; i < n && !adjacent_pair; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::array<std::size_t, 2> cols{i, j};
                if (rank(h.select_columns(cols)) > 1) continue;
                if (!any_pair) any_pair = std::pair{i, j};
                if (cyclically_adjacent(i, j, n)) {
                    adjacent_pair = std::pair{i, j};
                    break;
                }
            }
        if (adjacent_pair) {
            out.profile_case = ProfileCase::B;
            out.hamming_distance = 2;
            out.low_weight_support = adjacent_pair;
        } else if (any_pair) {
            out.profile_case = ProfileCase::C;
            out.hamming_distance = 2;
            out.low_weight_support = any_pair;
        } else {
            out.profile_case = ProfileCase::D;
            out.hamming_distance = 3;
        }
    }
    out.predicted = predicted_profile(out.profile_case, 2, n);
    return out;
}

Classification classify(const LinearCode& code) {
    const std::size_t codim = code.length() - code.dimension();
    if (codim == 1) return classify_codim1(code);
    if (codim == 2) return classify_codim2(code);
    throw DomainError("classification covers codimension 1 and 2 only (got " + std::to_string(codim) + ")");
}

ExampleFamily parse_example_family(std::string_view tag) {
    static constexpr std::array names{"H1", "H2", "H3", "H4", "H5"};
    for (std::size_t i = 0; i < names.size(); ++i)
        if (tag == names[i]) return static_cast<ExampleFamily>(i);
    throw ParseError("unknown example family '" + std::string(tag) + "'");
}

std::string_view to_string(ExampleFamily family) noexcept {
    static constexpr std::array<std::string_view, 5> names{"H1", "H2", "H3", "H4", "H5"};
    return names[static_cast<std::size_t>(family)];
}

ProfileCase expected_case(ExampleFamily family) noexcept {
    switch (family) {
    case ExampleFamily::H1: return ProfileCase::A;
    case ExampleFamily::H2: return ProfileCase::B;
    case ExampleFamily::H3:
    case ExampleFamily::H4: return ProfileCase::C;
    case ExampleFamily::H5: return ProfileCase::D;
    }
    return ProfileCase::A;
}

Matrix example_parity_check(ExampleFamily family, const Field& field, std::size_t n) {
    const auto require = [&](bool ok, const char* what) {
        if (!ok) throw DomainError(std::string(to_string(family)) + " needs " + what);
    };
    Matrix h(field, 2, n);
    const FieldElement one = field.one();
    switch (family) {
    case ExampleFamily::H1:
        require(n >= 3, "n >= 3");
        h(0, 0) = one;
        h(1, 1) = one;
        break;
    case ExampleFamily::H2:
        require(n >= 4, "n >= 4");
        h(0, 0) = h(0, 1) = one;
        for (std::size_t c = 2; c < n; ++c) h(1, c) = one;
        break;
    case ExampleFamily::H3:
        require(n >= 4 && n % 2 == 0, "even n >= 4");
        for (std::size_t c = 0; c < n; ++c) h(c % 2, c) = one;
        break;
    case ExampleFamily::H4:
        require(n >= 5 && n % 2 == 1, "odd n >= 5");
        for (std::size_t c = 0; c + 1 < n; ++c) h(c % 2, c) = one;
        h(0, n - 1) = h(1, n - 1) = one;
        break;
    case ExampleFamily::H5: {
        require(n >= 3 && n <= field.order(), "3 <= n <= q");
        const auto alpha = field.elements_in_order();
        for (std::size_t c = 0; c < n; ++c) {
            h(0, c) = one;
            h(1, c) = alpha[c];
        }
        break;
    }
    }
    return h;
}

LinearCode example_family(ExampleFamily family, const Field& field, std::size_t n) {
    return LinearCode::from_parity_check(example_parity_check(family, field, n));
}

} // namespace bsym
