// Command-line driver: reproducible sampling experiments over Hermitian
// octonion random matrices, with plot-ready CSV/JSON payloads.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "octrmt/errors.hpp"
#include "octrmt/octonion.hpp"
#include "octrmt/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitVerification = 3;

struct CommonFlags {
    long long trials = 10000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_format = "csv";
    std::string out_file = "-";
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--trials", f.trials, "number of Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    auto* seed_opt = cmd->add_option("--seed", f.seed, "master seed (omit for entropy)");
    cmd->callback([seed_opt, &f] { f.seed_given = seed_opt->count() > 0; });
    cmd->add_option("--out", f.out_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out-file", f.out_file, "output path ('-' for stdout)");
    cmd->add_option("--workers", f.workers,
                    "worker threads (default: OCTRMT_WORKERS or 1)");
}

std::uint64_t settle_seed(CommonFlags& f) {
    if (!f.seed_given) {
        std::random_device rd;
        f.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        std::cerr << "seed: " << f.seed << "\n";
    }
    return f.seed;
}

int emit(const octrmt::RunResult& r, const CommonFlags& f) {
    const std::string payload =
        (f.out_format == "json") ? octrmt::to_json_string(r) : octrmt::to_csv(r);
    if (f.out_file == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(f.out_file, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << f.out_file << "\n";
            return kExitUsage;
        }
        out << payload;
    }
    std::cerr << "wall time: " << r.wall_seconds << " s\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo experiments on Hermitian octonion random matrices"};
    app.require_subcommand(1);

    CommonFlags spacing_flags, smallest_flags, detsign_flags, jordan_flags;
    std::string spacing_ensemble = "gauss3";
    int spacing_bins = 60;
    int smallest_bins = 60;
    int smallest_n = 2;
    double detsign_a = 1.0;
    double jordan_a = 1.0;
    bool jordan_diagonal_only = false;
    bool verify_quick = false;
    bool verify_fault = false;
    std::uint64_t verify_seed = 20260809;

    auto* spacing = app.add_subcommand(
        "spacing", "unfolded eigenvalue spacings vs the beta=8 spacing density");
    spacing->add_option("--ensemble", spacing_ensemble, "gauss2 or gauss3")
        ->check(CLI::IsMember({"gauss2", "gauss3"}));
    spacing->add_option("--bins", spacing_bins, "histogram bins")->check(CLI::PositiveNumber);
    add_common(spacing, spacing_flags);

    auto* smallest = app.add_subcommand(
        "smallest", "smallest Wishart eigenvalue vs its analytic density");
    smallest->add_option("--n", smallest_n, "rows of the rectangular factor (>= 2)");
    smallest->add_option("--bins", smallest_bins, "histogram bins")->check(CLI::PositiveNumber);
    add_common(smallest, smallest_flags);

    auto* detsign = app.add_subcommand(
        "detsign", "sign statistics of det(T^dag T) for the 3x3 triangular construction");
    detsign->add_option("--a-param", detsign_a, "Gamma shape offset (> 0)");
    add_common(detsign, detsign_flags);

    auto* jordan = app.add_subcommand(
        "jordan-positivity", "negative-eigenvalue rate of (T^dag T + T T^dag)/2");
    jordan->add_option("--a-param", jordan_a, "Gamma shape offset (> 0)");
    jordan->add_flag("--diagonal-only", jordan_diagonal_only,
                     "zero the off-diagonal draws (rate must be exactly 0)");
    add_common(jordan, jordan_flags);

    auto* verify = app.add_subcommand("verify", "run the cross-module invariant suite");
    verify->add_flag("--quick", verify_quick, "reduced trial counts, same checks");
    verify->add_option("--seed", verify_seed, "seed for the randomized checks");
    verify->add_flag("--inject-table-fault", verify_fault,
                     "negative control: corrupt one multiplication-table sign");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spacing->parsed()) {
            octrmt::EnsembleSpec spec;
            spec.kind = (spacing_ensemble == "gauss2") ? octrmt::Ensemble::gauss2
                                                       : octrmt::Ensemble::gauss3;
            spec.trials = spacing_flags.trials;
            spec.seed = settle_seed(spacing_flags);
            spec.bins = spacing_bins;
            spec.workers = octrmt::resolve_workers(spacing_flags.workers);
            return emit(octrmt::run_spacing(spec), spacing_flags);
        }
        if (smallest->parsed()) {
            if (smallest_n < 2) {
                std::cerr << "error: --n must be at least 2\n";
                return kExitUsage;
            }
            octrmt::EnsembleSpec spec;
            spec.kind = octrmt::Ensemble::wishart2;
            spec.trials = smallest_flags.trials;
            spec.seed = settle_seed(smallest_flags);
            spec.bins = smallest_bins;
            spec.n = smallest_n;
            spec.workers = octrmt::resolve_workers(smallest_flags.workers);
            return emit(octrmt::run_smallest(spec), smallest_flags);
        }
        if (detsign->parsed()) {
            octrmt::EnsembleSpec spec;
            spec.kind = octrmt::Ensemble::tri3_det;
            spec.trials = detsign_flags.trials;
            spec.seed = settle_seed(detsign_flags);
            spec.a_param = detsign_a;
            spec.workers = octrmt::resolve_workers(detsign_flags.workers);
            return emit(octrmt::run_detsign(spec), detsign_flags);
        }
        if (jordan->parsed()) {
            octrmt::EnsembleSpec spec;
            spec.kind = octrmt::Ensemble::tri3_jordan;
            spec.trials = jordan_flags.trials;
            spec.seed = settle_seed(jordan_flags);
            spec.a_param = jordan_a;
            spec.workers = octrmt::resolve_workers(jordan_flags.workers);
            return emit(octrmt::run_jordan_positivity(spec, jordan_diagonal_only), jordan_flags);
        }
        if (verify->parsed()) {
            octrmt::testhooks::corrupt_multiplication_table(verify_fault);
            const auto checks = octrmt::run_verify_suite(verify_seed, verify_quick);
            octrmt::testhooks::corrupt_multiplication_table(false);
            bool all_pass = true;
            for (const auto& c : checks) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                          << "  (observed " << octrmt::format_double(c.observed)
                          << ", bound " << octrmt::format_double(c.bound) << ")\n";
                all_pass = all_pass && c.pass;
            }
            std::cout << (all_pass ? "verification passed" : "verification FAILED") << "\n";
            return all_pass ? kExitOk : kExitVerification;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const octrmt::numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
