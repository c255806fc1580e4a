#pragma once

#include "bsym/linear_code.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace bsym {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

struct EnumerationOptions {
    /// Refuse exhaustive work when q^k exceeds this.
    std::uint64_t cap = kDefaultEnumerationCap;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// q^k, saturating at UINT64_MAX.
std::uint64_t codeword_count(const LinearCode& code) noexcept;

/// Throws CapExceeded when q^k > options.cap.
void check_enumerable(const LinearCode& code, const EnumerationOptions& options);

/// Exact d_1(C), ..., d_n(C) (entry b-1 holds d_b) by exhaustive enumeration.
///
/// Codewords are visited once per one-dimensional subspace (w_b is invariant under
/// nonzero scalars). The message space is split into disjoint ranges that workers
/// process independently; the minima do not depend on the worker count.
/// Throws DomainError for the zero code and CapExceeded past the cap.
std::vector<std::size_t> min_b_distances(const LinearCode& code, const EnumerationOptions& options = {});

/// Exact d_b(C). d_n(C) = n is returned without enumeration.
std::size_t min_b_distance(const LinearCode& code, std::size_t b, const EnumerationOptions& options = {});

/// Upper bound on d_b(C): minimum of w_b over the generator rows and `samples`
/// random nonzero codewords drawn with a seeded generator.
std::size_t estimate_min_b_distance(const LinearCode& code, std::size_t b, std::size_t samples,
                                    std::uint64_t seed = 0);

/// Histogram of w_b over all q^k codewords (index = weight, 0..n).
std::vector<std::uint64_t> b_weight_distribution(const LinearCode& code, std::size_t b,
                                                 const EnumerationOptions& options = {});

/// Sequentially visits one nonzero codeword of every one-dimensional subspace (the
/// messages whose last nonzero digit is 1), stopping when `visit` returns false.
/// Returns false if stopped early.
bool for_each_projective_codeword(const LinearCode& code,
                                  const std::function<bool(std::span<const FieldElement>)>& visit,
                                  const EnumerationOptions& options = {});

enum class SingletonClass { Mds, Amds, Neither };

std::string to_string(SingletonClass c);

/// min{n - k + b, n}
std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t b);

SingletonClass singleton_class(std::size_t n, std::size_t k, std::size_t b, std::size_t d);

struct BSymbolProfile {
    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::size_t> distances;  ///< entry b-1 holds d_b
    std::vector<SingletonClass> flags;   ///< entry b-1 holds the class at b

    std::size_t d(std::size_t b) const { return distances.at(b - 1); }
    SingletonClass flag(std::size_t b) const { return flags.at(b - 1); }
};

BSymbolProfile make_profile(const Field& field, std::size_t n, std::size_t k, std::vector<std::size_t> distances);

/// Exact profile of a nonzero code.
BSymbolProfile profile(const LinearCode& code, const EnumerationOptions& options = {});

/// Singleton-like bound, monotonicity, d_{b+1} <= 2 d_b and upward closure of the MDS flag.
/// Returns one message per violated property; empty when the profile is consistent.
std::vector<std::string> profile_violations(const BSymbolProfile& profile);

} // namespace bsym
