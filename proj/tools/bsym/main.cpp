#include "commands.hpp"

#include <bsym/error.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>

int main(int argc, char** argv) {
    using namespace bsym::cli;

    CLI::App app{"Exact b-symbol distances of linear codes over finite fields"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--cap", common.cap, "Enumeration cap in codewords (overrides BSYM_CAP)");
    app.add_option("--workers", common.workers, "Enumeration threads; 0 picks the hardware concurrency");

    std::function<int()> action;

    ProfileArgs profile;
    auto* cmd_profile = app.add_subcommand("profile", "Exact b-symbol distance profile of a code file");
    cmd_profile->add_option("file", profile.file, "Code file")->required();
    cmd_profile->add_option("--b-range", profile.b_range, "Rows to print, as 'lo..hi' or a single b");
    auto* json_flag = cmd_profile->add_flag("--json", profile.json, "Emit JSON");
    cmd_profile->add_flag("--csv", profile.csv, "Emit CSV")->excludes(json_flag);
    cmd_profile->callback([&] { action = [&] { return run_profile(profile, common); }; });

    MpcArgs mpc;
    auto* cmd_mpc = app.add_subcommand("mpc", "Bounds and exact d_b for a matrix product code");
    cmd_mpc->add_option("file", mpc.file, "Matrix product spec file")->required();
    cmd_mpc->add_option("--b", mpc.b, "Symbol size; every b when omitted");
    cmd_mpc->add_flag("--no-exact", mpc.skip_exact, "Skip the exhaustive d_b of the product code");
    cmd_mpc->callback([&] { action = [&] { return run_mpc(mpc, common); }; });

    RmArgs rm;
    auto* cmd_rm = app.add_subcommand("rm", "Reed-Muller b-symbol distance table (CSV)");
    cmd_rm->add_option("--q", rm.q, "Field order, e.g. 4 or 2^2")->required();
    cmd_rm->add_option("--m", rm.m, "Number of variables")->required();
    cmd_rm->add_option("--r", rm.r, "Degree")->required();
    cmd_rm->add_flag("--verify", rm.verify, "Compare the closed form with exhaustive enumeration");
    cmd_rm->add_flag("--witness", rm.witness, "Print a successive minimum-weight codeword");
    cmd_rm->callback([&] { action = [&] { return run_rm(rm, common); }; });

    AmdsArgs amds;
    auto* cmd_amds = app.add_subcommand("amds", "Certificate for the [2n, 2n-2] AMDS construction (JSON)");
    cmd_amds->add_option("--q", amds.q, "Odd field order")->required();
    cmd_amds->add_option("--n", amds.n, "Constituent length")->required();
    cmd_amds->add_option("--b", amds.b, "Symbol size, 1 <= b <= n-1")->required();
    cmd_amds->callback([&] { action = [&] { return run_amds(amds, common); }; });

    ClassifyArgs classify;
    auto* cmd_classify = app.add_subcommand("classify", "Profile case of an [n, n-1] or [n, n-2] code");
    cmd_classify->add_option("file", classify.file, "Code file")->required();
    cmd_classify->callback([&] { action = [&] { return run_classify(classify, common); }; });

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify-all", "Run every invariant suite on seeded random instances");
    cmd_verify->add_option("--seed", verify.seed, "RNG seed")->capture_default_str();
    cmd_verify->add_option("--trials", verify.trials, "Random instances per suite")->capture_default_str();
    cmd_verify->callback([&] { action = [&] { return run_verify_all(verify, common); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        return action();
    } catch (const bsym::CapExceeded& e) {
        std::cerr << "bsym: " << e.what() << '\n';
        return kExitCap;
    } catch (const bsym::Error& e) {
        std::cerr << "bsym: " << e.what() << '\n';
        return kExitParse;
    }
}
