#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octrmt {

enum class Ensemble { gauss2, gauss3, wishart2, cholesky2, tri3_det, tri3_jordan };

std::string ensemble_name(Ensemble e);

/// Description of one sampling experiment. Trial t always draws from the
/// substream (seed, t), so results are independent of the worker count.
struct EnsembleSpec {
    Ensemble kind = Ensemble::gauss2;
    long long trials = 10000;
    std::uint64_t seed = 0;
    int n = 2;            // wishart2 rows
    double a_param = 1.0; // cholesky2 / tri3 shape offset
    int bins = 60;
    int workers = 1;

    void validate() const; // throws std::invalid_argument
};

/// Collected output of one command. Wall time is informational only and is
/// never serialized: re-running an identical spec must reproduce identical
/// bytes.
struct RunResult {
    std::string command;
    EnsembleSpec spec;
    std::vector<std::pair<std::string, double>> stats;

    // histogram payload (empty for the counting experiments)
    std::vector<double> edges;
    std::vector<double> density;
    std::vector<double> reference_curve;
    std::string reference_label;
    std::optional<double> ks;

    double wall_seconds = 0.0;
};

std::string to_csv(const RunResult& r);
std::string to_json_string(const RunResult& r);

/// Unfolded eigenvalue spacings of gauss2 or gauss3 against the beta = 8
/// unit-mean spacing density. gauss3 pools lambda2-lambda1 and
/// lambda3-lambda2 separately for the KS statistics and overlays both pools
/// in the histogram.
RunResult run_spacing(const EnsembleSpec& spec);

/// Smallest eigenvalue of wishart2(n) against its analytic density.
RunResult run_smallest(const EnsembleSpec& spec);

/// Sign statistics of det(T^dag T) for the 3x3 triangular construction.
RunResult run_detsign(const EnsembleSpec& spec);

/// Rate of negative minimum eigenvalue of (T^dag T + T T^dag)/2.
RunResult run_jordan_positivity(const EnsembleSpec& spec, bool diagonal_only = false);

struct CheckResult {
    std::string name;
    bool pass;
    double observed;
    double bound;
};

/// The cross-module invariant suite behind `verify`: algebra identities,
/// embedding degeneracies, Jordan spectral identities, projector laws,
/// Wishart positivity, stream reproducibility.
std::vector<CheckResult> run_verify_suite(std::uint64_t seed, bool quick);

/// Number of workers to use: explicit request if positive, else the
/// OCTRMT_WORKERS environment variable, else 1.
int resolve_workers(int requested);

/// Chunked parallel loop over [0, total); fn must be safe to call
/// concurrently for distinct indices. Exceptions are rethrown in the caller.
void parallel_for(long long total, int workers, const std::function<void(long long)>& fn);

/// Shortest round-trip decimal formatting, locale-independent.
std::string format_double(double v);

} // namespace octrmt
