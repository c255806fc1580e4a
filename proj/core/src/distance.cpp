#include "bsym/distance.hpp"

#include "bsym/error.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <thread>

namespace bsym {

namespace {

// Odometer digits per work item: q^digits stays within this many codewords.
constexpr std::uint64_t kChunkCodewords = 4096;

class SymbolAdder {
public:
    explicit SymbolAdder(const Field& f) : field_(f), q_(f.order()), table_(f.addition_table()) {}

    void add_into(std::span<FieldElement> dst, std::span<const FieldElement> src) const {
        if (field_.characteristic() == 2) {
            for (std::size_t i = 0; i < dst.size(); ++i) dst[i].value ^= src[i].value;
        } else if (!table_.empty()) {
            for (std::size_t i = 0; i < dst.size(); ++i) dst[i].value = table_[dst[i].value * q_ + src[i].value];
        } else {
            for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = field_.add(dst[i], src[i]);
        }
    }

private:
    const Field& field_;
    std::uint32_t q_;
    std::span<const std::uint16_t> table_;
};

struct WorkItem {
    std::size_t lead;         // index of the highest nonzero message digit, fixed to 1
    std::uint64_t fixed;      // base-q value of digits [odometer, lead)
};

// Splits the projective message space into independent work items and walks each
// with a base-q odometer, updating the codeword by one precomputed row per digit step.
class ProjectiveEnumerator {
public:
    explicit ProjectiveEnumerator(const LinearCode& code)
        : code_(code), field_(code.field()), q_(field_.order()), k_(code.dimension()), n_(code.length()) {
        std::uint64_t span = 1;
        while (odometer_digits_ < k_ && span * q_ <= kChunkCodewords) {
            span *= q_;
            ++odometer_digits_;
        }
        // step[j][v] = (e_{v+1} - e_v) g_j, with the wrap step v = q-1 taking e_{q-1} back to 0.
        const std::size_t digits = std::min(odometer_digits_, k_);
        steps_.resize(digits * q_ * n_);
        for (std::size_t j = 0; j < digits; ++j) {
            const auto g = code_.generator().row(j);
            for (std::uint32_t v = 0; v < q_; ++v) {
                const FieldElement from = FieldElement{static_cast<std::uint16_t>(v)};
                const FieldElement to = FieldElement{static_cast<std::uint16_t>((v + 1) % q_)};
                const FieldElement delta = field_.sub(to, from);
                auto dst = step(j, v);
                for (std::size_t c = 0; c < n_; ++c) dst[c] = field_.mul(delta, g[c]);
            }
        }
        for (std::size_t lead = 0; lead < k_; ++lead) {
            const std::size_t fixed_digits = lead > odometer_digits_ ? lead - odometer_digits_ : 0;
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < fixed_digits; ++i) count *= q_;
            for (std::uint64_t v = 0; v < count; ++v) items_.push_back({lead, v});
        }
    }

    std::size_t item_count() const noexcept { return items_.size(); }

    // Visits every codeword of one work item; `visit(word)` returns false to stop.
    template <class Visit>
    bool run(std::size_t index, Word& word, std::vector<std::uint32_t>& digits, Visit&& visit) const {
        const WorkItem item = items_[index];
        const SymbolAdder adder(field_);
        const std::size_t odo = std::min(odometer_digits_, item.lead);

        std::copy_n(code_.generator().row(item.lead).begin(), n_, word.begin());
        std::uint64_t rest = item.fixed;
        Word scaled(n_);
        for (std::size_t j = odo; j < item.lead; ++j) {
            const auto v = static_cast<std::uint16_t>(rest % q_);
            rest /= q_;
            if (v == 0) continue;
            const auto g = code_.generator().row(j);
            for (std::size_t c = 0; c < n_; ++c) scaled[c] = field_.mul(FieldElement{v}, g[c]);
            adder.add_into(word, scaled);
        }

        digits.assign(odo, 0);
        while (true) {
            if (!visit(std::span<const FieldElement>(word))) return false;
            std::size_t j = 0;
            while (j < odo) {
                adder.add_into(word, step(j, digits[j]));
                digits[j] = (digits[j] + 1) % q_;
                if (digits[j] != 0) break;
                ++j;
            }
            if (j == odo) return true;
        }
    }

private:
    std::span<FieldElement> step(std::size_t j, std::uint32_t v) {
        return {steps_.data() + (j * q_ + v) * n_, n_};
    }
    std::span<const FieldElement> step(std::size_t j, std::uint32_t v) const {
        return {steps_.data() + (j * q_ + v) * n_, n_};
    }

    const LinearCode& code_;
    const Field& field_;
    std::uint32_t q_;
    std::size_t k_;
    std::size_t n_;
    std::size_t odometer_digits_ = 0;
    std::vector<FieldElement> steps_;
    std::vector<WorkItem> items_;
};

unsigned resolve_workers(const EnumerationOptions& options, std::size_t items) {
    unsigned w = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(items, 1)));
}

// Runs `make_state()` per worker, feeds it every item, and returns the worker states.
template <class State, class MakeState, class Visit>
std::vector<State> parallel_enumerate(const ProjectiveEnumerator& e, std::size_t n, unsigned workers,
                                      MakeState make_state, Visit visit) {
    std::vector<State> states;
    states.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) states.push_back(make_state());
    std::atomic<std::size_t> next{0};
    auto body = [&](State& state) {
        Word word(n);
        std::vector<std::uint32_t> digits;
        for (std::size_t i = next.fetch_add(1); i < e.item_count(); i = next.fetch_add(1))
            e.run(i, word, digits, [&](std::span<const FieldElement> w) {
                visit(state, w);
                return true;
            });
    };
    if (workers == 1) {
        body(states.front());
    } else {
        std::vector<std::jthread> threads;
        for (unsigned i = 0; i < workers; ++i) threads.emplace_back([&, i] { body(states[i]); });
    }
    return states;
}

// Accumulates w_b for every b straight from the window definition: the window at i is
// nonzero iff the cyclic distance from i to the next nonzero symbol is below b.
struct MinTracker {
    std::vector<std::size_t> best;
    std::vector<std::size_t> gaps;

    explicit MinTracker(std::size_t n) : best(n, std::numeric_limits<std::size_t>::max()), gaps(n) {}

    void observe(std::span<const FieldElement> w) {
        const std::size_t n = w.size();
        std::size_t first = n;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i].value != 0) {
                first = i;
                break;
            }
        if (first == n) return;
        std::fill(gaps.begin(), gaps.end(), 0);
        std::size_t next = first + n;
        for (std::size_t i = n; i-- > 0;) {
            if (w[i].value != 0) next = i;
            ++gaps[next - i];
        }
        std::size_t acc = 0;
        for (std::size_t b = 0; b < n; ++b) {
            acc += gaps[b];
            if (acc < best[b]) best[b] = acc;
        }
    }
};

} // namespace

std::uint64_t codeword_count(const LinearCode& code) noexcept {
    std::uint64_t count = 1;
    const std::uint64_t q = code.field().order();
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        count *= q;
    }
    return count;
}

void check_enumerable(const LinearCode& code, const EnumerationOptions& options) {
    const std::uint64_t count = codeword_count(code);
    if (count > options.cap)
        throw CapExceeded("code has q^k = " + std::to_string(count) + " codewords, over the enumeration cap " +
                          std::to_string(options.cap));
}

std::vector<std::size_t> min_b_distances(const LinearCode& code, const EnumerationOptions& options) {
    if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
    check_enumerable(code, options);
    const std::size_t n = code.length();
    const ProjectiveEnumerator e(code);
    auto states = parallel_enumerate<MinTracker>(
        e, n, resolve_workers(options, e.item_count()), [n] { return MinTracker(n); },
        [](MinTracker& t, std::span<const FieldElement> w) { t.observe(w); });
    std::vector<std::size_t> best = states.front().best;
    for (const auto& s : states)
        for (std::size_t b = 0; b < n; ++b) best[b] = std::min(best[b], s.best[b]);
    return best;
}

std::size_t min_b_distance(const LinearCode& code, std::size_t b, const EnumerationOptions& options) {
    const std::size_t n = code.length();
    if (b < 1 || b > n) throw DomainError("b = " + std::to_string(b) + " outside 1.." + std::to_string(n));
    if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
    if (b == n) return n;
    return min_b_distances(code, options)[b - 1];
}

std::size_t estimate_min_b_distance(const LinearCode& code, std::size_t b, std::size_t samples, std::uint64_t seed) {
    if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
    const std::size_t n = code.length();
    if (b < 1 || b > n) throw DomainError("b = " + std::to_string(b) + " outside 1.." + std::to_string(n));
    std::size_t best = n;
    for (std::size_t r = 0; r < code.dimension(); ++r) best = std::min(best, b_weight(code.generator().row(r), b));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, code.field().order() - 1);
    Word message(code.dimension());
    for (std::size_t s = 0; s < samples; ++s) {
        bool nonzero = false;
        while (!nonzero) {
            for (auto& m : message) {
                m = FieldElement{static_cast<std::uint16_t>(digit(rng))};
                nonzero = nonzero || m.value != 0;
            }
        }
        best = std::min(best, b_weight(code.encode(message), b));
    }
    return best;
}

std::vector<std::uint64_t> b_weight_distribution(const LinearCode& code, std::size_t b,
                                                 const EnumerationOptions& options) {
    const std::size_t n = code.length();
    if (b < 1 || b > n) throw DomainError("b = " + std::to_string(b) + " outside 1.." + std::to_string(n));
    std::vector<std::uint64_t> hist(n + 1, 0);
    hist[0] = 1;
    if (code.dimension() == 0) return hist;
    check_enumerable(code, options);
    const ProjectiveEnumerator e(code);
    auto states = parallel_enumerate<std::vector<std::uint64_t>>(
        e, n, resolve_workers(options, e.item_count()), [n] { return std::vector<std::uint64_t>(n + 1, 0); },
        [b](std::vector<std::uint64_t>& h, std::span<const FieldElement> w) { ++h[b_weight_profile(w)[b - 1]]; });
    const std::uint64_t scalars = code.field().order() - 1;
    for (const auto& s : states)
        for (std::size_t i = 0; i <= n; ++i) hist[i] += s[i] * scalars;
    return hist;
}

bool for_each_projective_codeword(const LinearCode& code,
                                  const std::function<bool(std::span<const FieldElement>)>& visit,
                                  const EnumerationOptions& options) {
    if (code.dimension() == 0) return true;
    check_enumerable(code, options);
    const ProjectiveEnumerator e(code);
    Word word(code.length());
    std::vector<std::uint32_t> digits;
    for (std::size_t i = 0; i < e.item_count(); ++i)
        if (!e.run(i, word, digits, visit)) return false;
    return true;
}

std::string to_string(SingletonClass c) {
    switch (c) {
    case SingletonClass::Mds: return "MDS";
    case SingletonClass::Amds: return "AMDS";
    case SingletonClass::Neither: return "neither";
    }
    return "neither";
}

std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t b) { return std::min(n - k + b, n); }

SingletonClass singleton_class(std::size_t n, std::size_t k, std::size_t b, std::size_t d) {
    const std::size_t bound = singleton_bound(n, k, b);
    if (d == bound) return SingletonClass::Mds;
    if (d + 1 == bound) return SingletonClass::Amds;
    return SingletonClass::Neither;
}

BSymbolProfile make_profile(const Field& field, std::size_t n, std::size_t k, std::vector<std::size_t> distances) {
    if (distances.size() != n) throw DomainError("profile needs one distance per b = 1..n");
    BSymbolProfile p{field, n, k, std::move(distances), {}};
    for (std::size_t b = 1; b <= n; ++b) p.flags.push_back(singleton_class(n, k, b, p.d(b)));
    return p;
}

BSymbolProfile profile(const LinearCode& code, const EnumerationOptions& options) {
    return make_profile(code.field(), code.length(), code.dimension(), min_b_distances(code, options));
}

std::vector<std::string> profile_violations(const BSymbolProfile& p) {
    std::vector<std::string> out;
    for (std::size_t b = 1; b <= p.n; ++b) {
        const std::string at = " at b=" + std::to_string(b);
        if (p.d(b) > singleton_bound(p.n, p.k, b)) out.push_back("Singleton-like bound violated" + at);
        if (b < p.n) {
            if (p.d(b + 1) < p.d(b)) out.push_back("d_b decreases" + at);
            // A word of minimum b-weight has at most w_1 <= w_b holes, and widening the
            // window grows each hole's contribution by at most one.
            if (p.d(b + 1) > 2 * p.d(b)) out.push_back("d_{b+1} > 2 d_b" + at);
            if (p.flag(b) == SingletonClass::Mds && p.flag(b + 1) != SingletonClass::Mds)
                out.push_back("MDS flag not upward closed" + at);
        }
    }
    return out;
}

} // namespace bsym
