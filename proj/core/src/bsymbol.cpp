#include "bsym/bsymbol.hpp"

#include "bsym/error.hpp"

#include <algorithm>

namespace bsym {

namespace {

void check_b(std::size_t b, std::size_t n) {
    if (b < 1 || b > n)
        throw DomainError("b = " + std::to_string(b) + " outside 1.." + std::to_string(n));
}

} // namespace

std::vector<std::size_t> b_support(std::span<const FieldElement> x, std::size_t b) {
    const std::size_t n = x.size();
    check_b(b, n);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            if (x[(i + j) % n].value != 0) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

std::size_t hamming_weight(std::span<const FieldElement> x) noexcept {
    return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](FieldElement v) { return v.value != 0; }));
}

std::size_t b_weight(std::span<const FieldElement> x, std::size_t b) { return b_support(x, b).size(); }

std::size_t b_distance(const Field& field, std::span<const FieldElement> x, std::span<const FieldElement> y,
                       std::size_t b) {
    if (x.size() != y.size()) throw DomainError("b_distance on words of different length");
    Word diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = field.sub(x[i], y[i]);
    return b_weight(diff, b);
}

std::vector<std::size_t> b_weight_profile(std::span<const FieldElement> x) {
    // The window starting at i is nonzero iff the next nonzero position at or after i
    // (cyclically) lies fewer than b steps away.
    const std::size_t n = x.size();
    std::vector<std::size_t> weights(n, 0);
    if (n == 0) return weights;
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i].value != 0) {
            first = i;
            break;
        }
    if (first == n) return weights;

    std::vector<std::size_t> count(n, 0);
    std::size_t next = first + n; // next nonzero position, unrolled past the end
    for (std::size_t i = n; i-- > 0;) {
        if (x[i].value != 0) next = i;
        ++count[next - i];
    }
    std::size_t acc = 0;
    for (std::size_t b = 1; b <= n; ++b) {
        acc += count[b - 1];
        weights[b - 1] = acc;
    }
    return weights;
}

HoleSet holes(std::span<const std::size_t> support, std::size_t n) {
    HoleSet out;
    out.length = n;
    out.support.assign(support.begin(), support.end());
    std::sort(out.support.begin(), out.support.end());
    out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
    if (!out.support.empty() && out.support.back() >= n) throw DomainError("support position outside Z_n");
    const std::size_t g = out.support.size();
    if (g == 0 || g == n) return out;
    for (std::size_t i = 0; i < g; ++i) {
        const std::size_t a = out.support[i];
        const std::size_t next = out.support[(i + 1) % g];
        const std::size_t gap = (next + n - a - 1) % n;
        if (gap > 0) out.holes.push_back({(a + 1) % n, gap});
    }
    std::sort(out.holes.begin(), out.holes.end(), [](const Hole& l, const Hole& r) { return l.start < r.start; });
    return out;
}

std::vector<std::size_t> hamming_support(std::span<const FieldElement> x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].value != 0) out.push_back(i);
    return out;
}

std::size_t b_weight_via_holes(std::span<const FieldElement> x, std::size_t b) {
    check_b(b, x.size());
    const auto support = hamming_support(x);
    std::size_t w = support.size();
    for (const Hole& h : holes(support, x.size()).holes) w += std::min(h.size, b - 1);
    return w;
}

bool is_successive(std::span<const std::size_t> support, std::size_t n) {
    return holes(support, n).holes.size() <= 1;
}

bool has_boundary_hole(std::span<const FieldElement> x, std::size_t b) {
    const std::size_t n = x.size();
    check_b(b, n);
    for (const Hole& h : holes(hamming_support(x), n).holes)
        if (h.size + 1 >= b && (HoleSet::covers(h, 0, n) || HoleSet::covers(h, n - 1, n))) return true;
    return false;
}

} // namespace bsym
