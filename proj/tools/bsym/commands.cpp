#include "commands.hpp"

#include <bsym/classify.hpp>
#include <bsym/error.hpp>
#include <bsym/io.hpp>
#include <bsym/report.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string_view>

namespace bsym::cli {

EnumerationOptions Common::options() const {
    EnumerationOptions opts;
    opts.workers = workers;
    if (cap) {
        opts.cap = *cap;
    } else if (const char* env = std::getenv("BSYM_CAP"); env && *env) {
        const std::string_view text(env);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw ParseError("BSYM_CAP must be a nonnegative integer, got '" + std::string(text) + "'");
        opts.cap = v;
    }
    return opts;
}

int run_profile(const ProfileArgs& args, const Common& common) {
    const LinearCode code = load_code(args.file);
    const BRange range = args.b_range.empty() ? BRange{} : parse_b_range(args.b_range);
    const BSymbolProfile p = profile(code, common.options());
    if (args.json) std::cout << profile_json(p, range);
    else if (args.csv) std::cout << profile_csv(p, range);
    else std::cout << profile_text(p, range);
    return kExitOk;
}

namespace {

std::optional<UvSpec> as_uv(const MatrixProductSpec& spec) {
    const Field& f = spec.field();
    if (f.characteristic() == 2 || spec.rows() != 2 || spec.columns() != 2) return std::nullopt;
    if (!(spec.mixing() == uv_mixing_matrix(f))) return std::nullopt;
    return UvSpec(spec.constituent(0), spec.constituent(1));
}

} // namespace

int run_mpc(const MpcArgs& args, const Common& common) {
    const MatrixProductSpec spec = load_matrix_product_spec(args.file);
    const auto opts = common.options();
    const std::size_t n = spec.block_length();
    const auto uv = as_uv(spec);

    auto report = [&](std::size_t b) {
        if (b < 1 || b > n)
            throw DomainError("--b " + std::to_string(b) + " outside 1.." + std::to_string(n) +
                              " (b ranges over the constituent length)");
        const BoundReport r = analyze_bounds(spec, b, !args.skip_exact, opts);
        std::optional<UvBounds> uvb;
        if (uv) uvb = uv_bounds(*uv, b, opts);
        return bound_report_json(r, uvb);
    };

    if (args.b) {
        std::cout << report(*args.b);
        return kExitOk;
    }
    for (std::size_t b = 1; b <= n; ++b) std::cout << report(b);
    return kExitOk;
}

int run_rm(const RmArgs& args, const Common& common) {
    const Field field = Field::parse(args.q);
    if (args.r < 0) throw DomainError("--r must be nonnegative");
    const RMParams params{field, args.r, args.m};
    const std::size_t n = params.length();

    std::cout << "# RM_" << field.order_string() << '(' << params.r << ", " << params.m << "), length " << n
              << ", dimension " << rm_dimension(params) << '\n';
    if (params.is_full_space()) std::cout << "# r >= m(q-1): the code is the full space\n";

    std::optional<std::vector<std::size_t>> exact;
    if (args.verify) {
        const LinearCode code = rm_by_evaluation(params);
        exact = min_b_distances(code, common.options());
    }
    std::optional<std::vector<std::size_t>> witness_profile;
    if (args.witness) {
        const Word w = rm_successive_witness(params);
        std::cout << "# witness";
        for (auto x : w) std::cout << ' ' << x.value;
        std::cout << '\n';
        witness_profile = b_weight_profile(w);
    }

    std::cout << kRmCsvHeader << (witness_profile ? ",witness_w_b" : "") << '\n';
    bool all_match = true;
    for (std::size_t b = 1; b <= n; ++b) {
        std::optional<std::size_t> e;
        if (exact) {
            e = (*exact)[b - 1];
            all_match = all_match && *e == rm_db(params, b);
        }
        std::cout << rm_csv_row(params, b, e);
        if (witness_profile) std::cout << ',' << (*witness_profile)[b - 1];
        std::cout << '\n';
    }
    return all_match ? kExitOk : kExitFail;
}

int run_amds(const AmdsArgs& args, const Common&) {
    const Field field = Field::parse(args.q);
    const AmdsCertificate cert = build_amds(field, args.n, args.b);
    std::cout << amds_certificate_json(cert);
    if (!cert.valid()) {
        std::cerr << "bsym: certificate failed to validate\n";
        return kExitFail;
    }
    return kExitOk;
}

int run_classify(const ClassifyArgs& args, const Common& common) {
    const LinearCode code = load_code(args.file);
    const Classification cls = classify(code);
    const auto opts = common.options();
    std::optional<BSymbolProfile> exact;
    if (codeword_count(code) <= opts.cap) exact = profile(code, opts);
    std::cout << classification_text(cls, exact);
    return exact && exact->distances != cls.predicted ? kExitFail : kExitOk;
}

} // namespace bsym::cli
