#include "bsym/field.hpp"

#include "bsym/error.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <utility>

namespace bsym {

namespace {

using Poly = std::vector<std::uint32_t>; // constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

Poly digits_of(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
    Poly d(e);
    for (std::uint32_t i = 0; i < e; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint32_t value_of(const Poly& d, std::uint32_t p, std::uint32_t e) {
    std::uint32_t v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
    return v;
}

// Schoolbook multiplication and reduction; only used while building the tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, const Poly& modulus, std::uint32_t p,
                       std::uint32_t e) {
    if (e == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    const Poly da = digits_of(a, p, e);
    const Poly db = digits_of(b, p, e);
    Poly prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + da[i] * db[j]) % p);
    return value_of(poly_mod(std::move(prod), modulus, p), p, e);
}

Poly canonical_modulus(std::uint32_t p, std::uint32_t e) {
    // Monic degree-e candidates in increasing base-p order of their lower coefficients.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly cand = digits_of(static_cast<std::uint32_t>(low), p, e);
        cand.push_back(1);
        if (cand[0] == 0) continue;
        if (is_irreducible(cand, p)) return cand;
    }
    throw DomainError("no irreducible polynomial found for GF(" + std::to_string(p) + "^" +
                      std::to_string(e) + ")");
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (f.back() != 1) throw DomainError("is_irreducible expects a monic polynomial");
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = digits_of(static_cast<std::uint32_t>(low), p, static_cast<std::uint32_t>(d));
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct Field::Tables {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    Poly modulus;
    std::vector<std::uint16_t> exp; // length 2(q-1), exp[i] = g^i
    std::vector<std::uint32_t> log; // log[0] unused
    std::vector<std::uint16_t> add; // q*q when q <= 256
    std::vector<std::uint16_t> negation;
    std::uint16_t generator = 1;

    std::uint16_t digit_add(std::uint32_t a, std::uint32_t b) const {
        if (e == 1) return static_cast<std::uint16_t>((a + b) % p);
        if (p == 2) return static_cast<std::uint16_t>(a ^ b);
        std::uint32_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return static_cast<std::uint16_t>(out);
    }
};

Field Field::make(std::uint32_t p, std::uint32_t e, std::uint32_t max_order) {
    if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw DomainError("field extension degree must be at least 1");
    const std::uint32_t cap = std::min(max_order, kMaxFieldOrder);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > cap)
            throw DomainError("field order " + std::to_string(p) + "^" + std::to_string(e) +
                              " exceeds the cap " + std::to_string(cap));
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Tables>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, e}); it != cache.end()) return Field(it->second);

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = static_cast<std::uint32_t>(q);
    if (e > 1) t->modulus = canonical_modulus(p, e);

    const std::uint32_t n = t->q - 1;
    t->exp.assign(2 * std::max<std::uint32_t>(n, 1), 1);
    t->log.assign(t->q, 0);
    if (t->q > 2) {
        for (std::uint32_t g = 2; g < t->q; ++g) {
            std::uint32_t x = 1, order = 0;
            do {
                x = slow_mul(x, g, t->modulus, p, e);
                ++order;
            } while (x != 1 && order <= n);
            if (order == n) {
                t->generator = static_cast<std::uint16_t>(g);
                break;
            }
        }
    }
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        t->exp[i] = static_cast<std::uint16_t>(x);
        t->exp[i + n] = static_cast<std::uint16_t>(x);
        t->log[x] = i;
        x = slow_mul(x, t->generator, t->modulus, p, e);
    }

    t->negation.resize(t->q);
    for (std::uint32_t a = 0; a < t->q; ++a) {
        std::uint32_t out = 0, scale = 1, v = a;
        for (std::uint32_t i = 0; i < e; ++i) {
            out += ((p - v % p) % p) * scale;
            v /= p;
            scale *= p;
        }
        t->negation[a] = static_cast<std::uint16_t>(out);
    }
    if (t->q <= 256) {
        t->add.resize(std::size_t{t->q} * t->q);
        for (std::uint32_t a = 0; a < t->q; ++a)
            for (std::uint32_t b = 0; b < t->q; ++b) t->add[a * t->q + b] = t->digit_add(a, b);
    }

    cache.emplace(std::pair{p, e}, t);
    return Field(std::move(t));
}

Field Field::of_order(std::uint32_t q) {
    if (q < 2) throw DomainError("field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw DomainError(std::to_string(q) + " is not a prime power");
    return make(p, e);
}

Field Field::parse(std::string_view text) {
    auto number = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw ParseError("invalid field order '" + std::string(text) + "'");
        return v;
    };
    try {
        if (auto caret = text.find('^'); caret != std::string_view::npos)
            return make(number(text.substr(0, caret)), number(text.substr(caret + 1)));
        return of_order(number(text));
    } catch (const DomainError& err) {
        throw ParseError(err.what());
    }
}

std::uint32_t Field::characteristic() const noexcept { return t_->p; }
std::uint32_t Field::degree() const noexcept { return t_->e; }
std::uint32_t Field::order() const noexcept { return t_->q; }
std::span<const std::uint32_t> Field::modulus() const noexcept { return t_->modulus; }

FieldElement Field::element(std::uint32_t value) const {
    if (value >= t_->q)
        throw DomainError("value " + std::to_string(value) + " is not an element of GF(" +
                          order_string() + ")");
    return FieldElement{static_cast<std::uint16_t>(value)};
}

FieldElement Field::from_integer(std::int64_t n) const noexcept {
    const auto p = static_cast<std::int64_t>(t_->p);
    return FieldElement{static_cast<std::uint16_t>(((n % p) + p) % p)};
}

bool Field::contains(FieldElement a) const noexcept { return a.value < t_->q; }

FieldElement Field::add(FieldElement a, FieldElement b) const noexcept {
    if (!t_->add.empty()) return FieldElement{t_->add[a.value * t_->q + b.value]};
    return FieldElement{t_->digit_add(a.value, b.value)};
}

FieldElement Field::neg(FieldElement a) const noexcept { return FieldElement{t_->negation[a.value]}; }

FieldElement Field::sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const noexcept {
    if (a.value == 0 || b.value == 0) return zero();
    return FieldElement{t_->exp[t_->log[a.value] + t_->log[b.value]]};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.value == 0) throw DomainError("inverse of zero");
    const std::uint32_t n = t_->q - 1;
    return FieldElement{t_->exp[(n - t_->log[a.value]) % n]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t exponent) const noexcept {
    if (exponent == 0) return one();
    if (a.value == 0) return zero();
    const std::uint64_t n = t_->q - 1;
    return FieldElement{t_->exp[(t_->log[a.value] * (exponent % n)) % n]};
}

FieldElement Field::primitive_element() const noexcept { return FieldElement{t_->generator}; }

std::vector<FieldElement> Field::elements_in_order() const {
    std::vector<FieldElement> out(t_->q);
    for (std::uint32_t i = 0; i < t_->q; ++i) out[i] = FieldElement{static_cast<std::uint16_t>(i)};
    return out;
}

std::span<const std::uint16_t> Field::addition_table() const noexcept { return t_->add; }

std::string Field::order_string() const {
    if (t_->e == 1) return std::to_string(t_->p);
    return std::to_string(t_->p) + "^" + std::to_string(t_->e);
}

std::string Field::format(FieldElement a) const {
    if (t_->e == 1) return std::to_string(a.value);
    if (a.value == 0) return "0";
    const Poly d = digits_of(a.value, t_->p, t_->e);
    std::string out;
    for (std::uint32_t i = t_->e; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (d[i] != 1 || i == 0) out += std::to_string(d[i]);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->e == b.t_->e);
}

} // namespace bsym
