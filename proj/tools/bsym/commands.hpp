#pragma once

#include <bsym/distance.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace bsym::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;

struct Common {
    std::optional<std::uint64_t> cap; ///< --cap; falls back to BSYM_CAP, then the default
    unsigned workers = 0;

    EnumerationOptions options() const;
};

struct ProfileArgs {
    std::string file;
    std::string b_range;
    bool json = false;
    bool csv = false;
};

struct MpcArgs {
    std::string file;
    std::optional<std::size_t> b;
    bool skip_exact = false;
};

struct RmArgs {
    std::string q;
    std::size_t m = 0;
    int r = 0;
    bool verify = false;
    bool witness = false;
};

struct AmdsArgs {
    std::string q;
    std::size_t n = 0;
    std::size_t b = 0;
};

struct ClassifyArgs {
    std::string file;
};

struct VerifyArgs {
    std::uint64_t seed = 42;
    std::size_t trials = 200;
};

int run_profile(const ProfileArgs& args, const Common& common);
int run_mpc(const MpcArgs& args, const Common& common);
int run_rm(const RmArgs& args, const Common& common);
int run_amds(const AmdsArgs& args, const Common& common);
int run_classify(const ClassifyArgs& args, const Common& common);
int run_verify_all(const VerifyArgs& args, const Common& common);

} // namespace bsym::cli
