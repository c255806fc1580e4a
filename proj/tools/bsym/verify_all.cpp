#include "commands.hpp"

#include <bsym/classify.hpp>
#include <bsym/error.hpp>
#include <bsym/linalg.hpp>
#include <bsym/random.hpp>
#include <bsym/reed_muller.hpp>
#include <bsym/uv_construction.hpp>

#include <iostream>

namespace bsym::cli {

namespace {

// Keeps each randomized exhaustive search small enough for a quick default run.
constexpr std::uint64_t kSuiteCodewordLimit = std::uint64_t{1} << 14;

struct Suite {
    explicit Suite(std::string suite_name = {}) : name(std::move(suite_name)) {}

    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
};

// Every profile the run computes goes through here so that the Singleton and
// monotonicity invariants are asserted on all of them.
class Profiler {
public:
    explicit Profiler(EnumerationOptions options) : options_(options), invariants_("profile-invariants") {}

    BSymbolProfile operator()(const LinearCode& code) {
        BSymbolProfile p = profile(code, options_);
        const auto violations = profile_violations(p);
        std::string what;
        if (!violations.empty()) what = "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "]: " + violations.front();
        invariants_.check(violations.empty(), what);
        return p;
    }

    const EnumerationOptions& options() const noexcept { return options_; }
    const Suite& invariants() const noexcept { return invariants_; }

private:
    EnumerationOptions options_;
    Suite invariants_;
};

std::string describe(const Field& f, std::size_t n, std::size_t k) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "]_" + f.order_string();
}

std::uint64_t power(std::uint64_t q, std::size_t k) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) v *= q;
    return v;
}

Suite example_56(Profiler& prof) {
    Suite s{"ternary-uv"};
    const Field f = Field::of_order(3);
    const LinearCode c1 = LinearCode::from_generator(Matrix::from_values(f, {{1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}}));
    const auto pc1 = prof(c1);
    s.check(pc1.d(3) == 4 && pc1.flag(3) == SingletonClass::Mds, "d_3(C1) should be 4 and MDS");

    const UvSpec spec(c1, c1);
    const UvBounds ub = uv_bounds(spec, 3, prof.options());
    s.check(ub.lower() == 4 && ub.upper() == 5, "expected 4 <= d_3(C) <= 5");

    const auto pc = prof(uv_construct(spec));
    s.check(pc.n == 8 && pc.k == 6, "product code should be [8,6]");
    s.check(pc.d(3) == 4 && pc.flag(3) == SingletonClass::Amds, "d_3(C) should be 4 and AMDS");
    return s;
}

Field pick_field(Rng& rng, std::initializer_list<std::uint32_t> orders) {
    const auto i = draw(rng, orders.size());
    return Field::of_order(*(orders.begin() + i));
}

Suite hole_oracle(std::size_t trials, Rng& rng) {
    Suite s{"b-weight-oracle"};
    for (std::size_t t = 0; t < trials * 50; ++t) {
        const Field f = pick_field(rng, {2, 3, 4, 5});
        const std::size_t n = 1 + draw(rng, 16);
        Word x = random_word(f, n, rng);
        if (draw(rng, 3) == 0)
            for (auto& v : x)
                if (draw(rng, 2) == 0) v = f.zero();
        const auto profile = b_weight_profile(x);
        for (std::size_t b = 1; b <= n; ++b) {
            const std::size_t direct = b_support(x, b).size();
            s.check(direct == b_weight_via_holes(x, b) && direct == profile[b - 1] && direct == b_weight(x, b),
                    "w_b disagreement at n=" + std::to_string(n) + " b=" + std::to_string(b));
        }
    }
    return s;
}

Suite reed_muller(Profiler& prof) {
    Suite s{"reed-muller"};
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const Field f = Field::of_order(q);
        for (std::size_t m = 1; power(q, m) <= 27; ++m) {
            for (int r = 0; r <= static_cast<int>(m * (q - 1)); ++r) {
                const RMParams params{f, r, m};
                const std::string tag = "RM_" + f.order_string() + "(" + std::to_string(r) + "," + std::to_string(m) + ")";
                const LinearCode eval = rm_by_evaluation(params);
                s.check(eval.dimension() == rm_dimension(params), tag + " dimension");
                s.check(same_row_space(eval.generator(), rm_by_recursion(params).generator()),
                        tag + " constructions differ");

                const Word w = rm_successive_witness(params);
                s.check(eval.contains(w) && is_successive(hamming_support(w), w.size()), tag + " witness");
                const auto wp = b_weight_profile(w);
                for (std::size_t b = 1; b <= params.length(); ++b)
                    s.check(wp[b - 1] == rm_db(params, b), tag + " witness weight at b=" + std::to_string(b));

                if (codeword_count(eval) > kSuiteCodewordLimit) continue;
                const auto p = prof(eval);
                for (std::size_t b = 1; b <= p.n; ++b) {
                    s.check(p.d(b) == rm_db(params, b), tag + " d_b formula at b=" + std::to_string(b));
                    s.check(rm_is_b_mds(params, b).mds == (p.flag(b) == SingletonClass::Mds),
                            tag + " MDS verdict at b=" + std::to_string(b));
                }
            }
        }
    }
    return s;
}

Matrix random_mixing(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    switch (draw(rng, 3)) {
    case 0:
        if (cols <= f.order()) return random_vandermonde(f, rows, cols, rng);
        break;
    case 1:
        if (auto m = random_triangular_nsc(f, rows, cols, rng)) return *m;
        break;
    default: break;
    }
    return random_full_rank(f, rows, cols, rng);
}

Suite matrix_product(std::size_t trials, Profiler& prof, Rng& rng) {
    Suite s{"matrix-product-bounds"};
    std::size_t done = 0;
    while (done < trials) {
        const Field f = pick_field(rng, {2, 3, 5});
        const std::size_t n = 2 + draw(rng, 4);
        const std::size_t big_m = 1 + draw(rng, 3);
        const std::size_t big_n = big_m + draw(rng, 5 - big_m);
        std::vector<std::size_t> ks(big_m);
        std::size_t total = 0;
        for (auto& k : ks) total += (k = 1 + draw(rng, n));
        if (power(f.order(), total) > kSuiteCodewordLimit) continue;
        ++done;

        std::vector<LinearCode> cs;
        for (auto k : ks) cs.push_back(random_code(f, n, k, rng));
        const MatrixProductSpec spec(std::move(cs), random_mixing(f, big_m, big_n, rng));
        const auto p = prof(product_code(spec));
        const std::string tag = describe(f, p.n, p.k) + " M=" + std::to_string(big_m) + " N=" + std::to_string(big_n);
        for (std::size_t b = 1; b <= n; ++b) {
            const BoundReport r = analyze_bounds(spec, b, false, prof.options());
            const std::size_t exact = p.d(b);
            s.check(r.best_lower() <= exact, tag + " lower bound above d_b at b=" + std::to_string(b));
            if (r.upper) {
                s.check(exact <= r.upper->upper, tag + " upper bound below d_b at b=" + std::to_string(b));
                if (r.upper->certified)
                    s.check(*r.upper->certified == exact, tag + " certified value wrong at b=" + std::to_string(b));
            }
        }
    }
    return s;
}

Suite uv(std::size_t trials, Profiler& prof, Rng& rng) {
    Suite s{"uv-bounds"};
    std::size_t done = 0;
    while (done < trials) {
        const Field f = pick_field(rng, {3, 5});
        const std::size_t n = 2 + draw(rng, 4);
        const std::size_t k1 = 1 + draw(rng, n), k2 = 1 + draw(rng, n);
        if (power(f.order(), k1 + k2) > kSuiteCodewordLimit) continue;
        ++done;
        const UvSpec spec(random_code(f, n, k1, rng), random_code(f, n, k2, rng));
        const auto p = prof(uv_construct(spec));
        const std::string tag = describe(f, p.n, p.k);
        for (std::size_t b = 1; b <= n; ++b) {
            const UvBounds ub = uv_bounds(spec, b, prof.options());
            const std::size_t exact = p.d(b);
            s.check(ub.lower() <= exact && exact <= ub.upper(), tag + " outside bounds at b=" + std::to_string(b));
            if (ub.certified()) s.check(*ub.certified() == exact, tag + " certified value wrong");
        }
    }
    return s;
}

Suite classification(std::size_t trials, Profiler& prof, Rng& rng) {
    Suite s{"classification"};
    std::size_t done = 0;
    while (done < trials) {
        const Field f = pick_field(rng, {2, 3, 5});
        const std::size_t codim = 1 + draw(rng, 2);
        const std::size_t n = codim + 1 + draw(rng, 10 - codim);
        if (power(f.order(), n - codim) > kSuiteCodewordLimit) continue;
        ++done;
        const LinearCode code = random_code_by_parity(f, n, codim, rng);
        const Classification cls = classify(code);
        s.check(prof(code).distances == cls.predicted,
                describe(f, n, n - codim) + " case " + case_letter(cls.profile_case) + " prediction wrong");
    }
    struct Instance {
        ExampleFamily family;
        std::uint32_t q;
        std::size_t n;
    };
    for (const Instance& in : {Instance{ExampleFamily::H1, 3, 5}, Instance{ExampleFamily::H2, 3, 6},
                               Instance{ExampleFamily::H3, 3, 6}, Instance{ExampleFamily::H4, 3, 5},
                               Instance{ExampleFamily::H5, 5, 4}}) {
        const LinearCode code = example_family(in.family, Field::of_order(in.q), in.n);
        const Classification cls = classify(code);
        const std::string tag(to_string(in.family));
        s.check(cls.profile_case == expected_case(in.family), tag + " lands in the wrong case");
        s.check(prof(code).distances == cls.predicted, tag + " prediction wrong");
    }
    return s;
}

Suite amds() {
    Suite s{"amds-certificates"};
    for (std::uint32_t q : {3u, 5u, 7u}) {
        const Field f = Field::of_order(q);
        for (std::size_t n = 3; n <= 20; ++n)
            for (std::size_t b = 1; b < n; ++b)
                s.check(build_amds(f, n, b).valid(),
                        "q=" + std::to_string(q) + " n=" + std::to_string(n) + " b=" + std::to_string(b));
    }
    return s;
}

} // namespace

int run_verify_all(const VerifyArgs& args, const Common& common) {
    std::cout << "# bsym verify-all seed=" << args.seed << " trials=" << args.trials << '\n';
    Rng rng(args.seed);
    Profiler prof(common.options());

    std::vector<Suite> suites;
    auto run = [&](auto&& fn) {
        try {
            suites.push_back(fn());
        } catch (const Error& e) {
            Suite crashed{"(suite aborted)"};
            crashed.check(false, e.what());
            suites.push_back(crashed);
        }
    };
    run([&] { return example_56(prof); });
    run([&] { return hole_oracle(args.trials, rng); });
    run([&] { return reed_muller(prof); });
    run([&] { return matrix_product(args.trials, prof, rng); });
    run([&] { return uv(args.trials / 2, prof, rng); });
    run([&] { return classification(args.trials, prof, rng); });
    run([] { return amds(); });
    suites.push_back(prof.invariants());

    std::size_t failed = 0;
    for (const Suite& s : suites) {
        const bool ok = s.failures == 0;
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS " : "FAIL ") << s.name << " checks=" << s.checks;
        if (!ok) std::cout << " failures=" << s.failures << " first: " << s.first_failure;
        std::cout << '\n';
    }
    std::cout << "verify-all: " << (failed == 0 ? "PASS" : "FAIL") << " (" << suites.size() - failed << '/'
              << suites.size() << " suites)\n";
    return failed == 0 ? kExitOk : kExitFail;
}

} // namespace bsym::cli
