#pragma once

#include "bsym/classify.hpp"
#include "bsym/distance.hpp"
#include "bsym/matrix_product.hpp"
#include "bsym/reed_muller.hpp"
#include "bsym/uv_construction.hpp"

#include <cstddef>
#include <optional>
#include <string>

// Machine-readable renderings shared by the CLI and the tests. Every JSON document
// carries "schema": 1; CSV headers are fixed.

namespace bsym {

inline constexpr int kSchemaVersion = 1;

struct BRange {
    std::size_t first = 1;
    std::size_t last = 0; ///< 0 means n
};

/// Parses "lo..hi" or a single "b".
BRange parse_b_range(const std::string& text);

/// {"schema", "n", "k", "q", "b_range", "d": [...], "flags": [...]}
std::string profile_json(const BSymbolProfile& profile, BRange range = {});
/// "b,d_b,singleton,flag" rows.
std::string profile_csv(const BSymbolProfile& profile, BRange range = {});
/// "b=3 d=4 MDS" rows.
std::string profile_text(const BSymbolProfile& profile, BRange range = {});

/// {"schema", "b", "lower_a", "lower_b", "lower_nsc", "upper", "exact", "tight", ...}.
/// "upper" is the smallest applicable upper bound: the triangular NSC bound, or the
/// [u+v, u-v] bounds when `uv` is given.
std::string bound_report_json(const BoundReport& report, const std::optional<UvBounds>& uv = std::nullopt);

/// {"schema", "n", "q", "b", "d_b", "upper_witness", "lower_bound_source", ...}
std::string amds_certificate_json(const AmdsCertificate& cert);

inline constexpr const char* kRmCsvHeader = "q,m,r,t,s,b,d_b_formula,d_b_exact,match";

/// One RM verification row; `exact` empty when not verified.
std::string rm_csv_row(const RMParams& params, std::size_t b, std::optional<std::size_t> exact);

/// Case letter, predicted profile and, when given, the exact profile with a verdict.
std::string classification_text(const Classification& cls, const std::optional<BSymbolProfile>& exact);

} // namespace bsym
