#include "bsym/report.hpp"

#include "bsym/error.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

namespace bsym {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> resolve(const BRange& range, std::size_t n) {
    const std::size_t last = range.last == 0 ? n : range.last;
    if (range.first < 1 || range.first > last || last > n)
        throw DomainError("b range " + std::to_string(range.first) + ".." + std::to_string(last) +
                          " outside 1.." + std::to_string(n));
    return {range.first, last};
}

std::size_t parse_count(const std::string& s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("invalid b range '" + s + "'");
    return v;
}

ordered_json optional_json(const std::optional<std::size_t>& v) { return v ? ordered_json(*v) : ordered_json(); }

ordered_json word_json(const Word& w) {
    ordered_json out = ordered_json::array();
    for (auto x : w) out.push_back(x.value);
    return out;
}

std::string certificate_name(EqualityCertificate c) {
    switch (c) {
    case EqualityCertificate::FirstConstituent: return "first-constituent";
    case EqualityCertificate::BoundaryHoleWitness: return "boundary-hole-witness";
    case EqualityCertificate::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

} // namespace

BRange parse_b_range(const std::string& text) {
    if (auto dots = text.find(".."); dots != std::string::npos)
        return {parse_count(text.substr(0, dots)), parse_count(text.substr(dots + 2))};
    const std::size_t b = parse_count(text);
    return {b, b};
}

std::string profile_json(const BSymbolProfile& p, BRange range) {
    const auto [lo, hi] = resolve(range, p.n);
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["n"] = p.n;
    j["k"] = p.k;
    j["q"] = p.field.order();
    j["b_range"] = {lo, hi};
    j["d"] = ordered_json::array();
    j["flags"] = ordered_json::array();
    for (std::size_t b = lo; b <= hi; ++b) {
        j["d"].push_back(p.d(b));
        j["flags"].push_back(to_string(p.flag(b)));
    }
    return j.dump(2) + "\n";
}

std::string profile_csv(const BSymbolProfile& p, BRange range) {
    const auto [lo, hi] = resolve(range, p.n);
    std::ostringstream out;
    out << "b,d_b,singleton,flag\n";
    for (std::size_t b = lo; b <= hi; ++b)
        out << b << ',' << p.d(b) << ',' << singleton_bound(p.n, p.k, b) << ',' << to_string(p.flag(b)) << '\n';
    return out.str();
}

std::string profile_text(const BSymbolProfile& p, BRange range) {
    const auto [lo, hi] = resolve(range, p.n);
    std::ostringstream out;
    out << "# [" << p.n << ", " << p.k << "] code over GF(" << p.field.order_string() << ")\n";
    for (std::size_t b = lo; b <= hi; ++b) out << "b=" << b << " d=" << p.d(b) << ' ' << to_string(p.flag(b)) << '\n';
    return out.str();
}

std::string bound_report_json(const BoundReport& r, const std::optional<UvBounds>& uv) {
    std::optional<std::size_t> upper;
    if (r.upper) upper = r.upper->upper;
    if (uv) upper = upper ? std::min(*upper, uv->upper()) : uv->upper();

    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["b"] = r.b;
    j["lower_a"] = r.lower_first_rows;
    j["lower_b"] = r.lower_last_rows;
    j["lower_nsc"] = optional_json(r.lower_nsc);
    j["upper"] = optional_json(upper);
    j["exact"] = optional_json(r.exact);
    j["tight"] = r.tight();
    if (r.upper) {
        j["triangular_nsc"] = {{"upper", r.upper->upper},
                               {"d_star", r.upper->lower},
                               {"certificate", certificate_name(r.upper->certificate)},
                               {"certified", optional_json(r.upper->certified)}};
    }
    if (uv) {
        j["uv"] = {{"d_b_c1", uv->d1},
                   {"d_b_c2", uv->d2},
                   {"lower", uv->lower()},
                   {"sandwich", {uv->sandwich_lower, uv->sandwich_upper}},
                   {"mds_upper", optional_json(uv->mds_upper)},
                   {"certified", optional_json(uv->certified())}};
    }
    return j.dump(2) + "\n";
}

std::string amds_certificate_json(const AmdsCertificate& c) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["n"] = c.n;
    j["q"] = c.field.order();
    j["b"] = c.b;
    j["d_b"] = c.d_b();
    j["upper_witness"] = word_json(c.upper_witness);
    j["lower_bound_source"] = "Thm5.1(b)";
    j["length"] = 2 * c.n;
    j["k"] = c.code.dimension();
    j["lower_bound"] = c.lower_bound;
    j["constituent_d_b"] = c.constituent_db;
    j["amds_target"] = c.target;
    j["valid"] = c.valid();
    return j.dump(2) + "\n";
}

std::string rm_csv_row(const RMParams& params, std::size_t b, std::optional<std::size_t> exact) {
    const std::size_t formula = rm_db(params, b);
    std::ostringstream out;
    out << params.field.order() << ',' << params.m << ',' << params.r << ',' << params.t() << ',' << params.s() << ','
        << b << ',' << formula << ',';
    if (exact) out << *exact << ',' << (*exact == formula ? "MATCH" : "MISMATCH");
    else out << ",NA";
    return out.str();
}

std::string classification_text(const Classification& cls, const std::optional<BSymbolProfile>& exact) {
    std::ostringstream out;
    out << "case " << case_letter(cls.profile_case) << '\n';
    out << "codimension " << cls.codimension << '\n';
    out << "d_1 " << cls.hamming_distance << '\n';
    out << "predicted";
    for (auto d : cls.predicted) out << ' ' << d;
    out << '\n';
    if (exact) {
        out << "exact";
        for (auto d : exact->distances) out << ' ' << d;
        out << '\n' << (exact->distances == cls.predicted ? "MATCH" : "MISMATCH") << '\n';
    }
    return out.str();
}

} // namespace bsym
