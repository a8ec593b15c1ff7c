// Acceptance suite: every reproduction target is pinned here with its
// tolerance and runtime budget. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.
//
// Two sub-checks encode published reference targets that are not attainable
// from first principles; they are kept as stated rather than loosened, and
// their lines carry the measured truth:
//   * criterion 7: the sign of det(T^dag T) for the triangular 3x3
//     construction. The octonion trace form is associative
//     (Re[(ab)c] = Re[a(bc)]), which collapses that determinant to
//     (t11 t22 t33)^2 >= 0, so no negative-determinant fraction in
//     [0.50, 0.60] can occur.
//   * criterion 8: the quoted beta=4 spacing-density skewness 0.35939. The
//     exact Gamma-ratio value is (2 - 81 pi/128)/(45 pi/128 - 1)^{3/2}
//     = 0.3542422..., confirmed by quadrature; the quoted kurtosis 0.03698
//     matches the same computation, isolating the skewness figure as a
//     misprint.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "octrmt/matrices.hpp"
#include "octrmt/rng.hpp"
#include "octrmt/runner.hpp"
#include "octrmt/samplers.hpp"
#include "octrmt/spectra.hpp"
#include "octrmt/stats.hpp"

namespace {

struct Criterion {
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<Criterion> g_results;

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void record(const std::string& name, bool pass, const std::string& detail, double secs) {
    g_results.push_back({name, pass, detail, secs});
    std::printf("[%s] %s  (%.1fs)  %s\n", pass ? "PASS" : "FAIL", name.c_str(), secs,
                detail.c_str());
    std::fflush(stdout);
}

int hw_workers() { return 8; }

double herm_norm(const octrmt::HermOct3& h) { return std::sqrt(octrmt::trace_square(h)); }

std::string fmt(double v) { return octrmt::format_double(v); }

// ------------------------------------------------------------------
void criterion1_algebra() {
    Timer t;
    bool ok = true;
    std::string detail;

    int table_matches = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (octrmt::Octonion::unit(i) * octrmt::Octonion::unit(j) ==
                octrmt::mul_cayley_dickson(octrmt::Octonion::unit(i), octrmt::Octonion::unit(j)))
                ++table_matches;
    ok = ok && table_matches == 64;

    const octrmt::Octonion l =
        octrmt::Octonion::unit(5) * (octrmt::Octonion::unit(6) * octrmt::Octonion::unit(7));
    const octrmt::Octonion r =
        (octrmt::Octonion::unit(5) * octrmt::Octonion::unit(6)) * octrmt::Octonion::unit(7);
    ok = ok && (l == -1.0 * r);

    octrmt::RngStream g(10101, 0);
    double worst_norm = 0.0, worst_alt = 0.0;
    for (long long k = 0; k < 1000000; ++k) {
        const octrmt::Octonion a = octrmt::sample_gaussian_octonion(g, 1.0);
        const octrmt::Octonion b = octrmt::sample_gaussian_octonion(g, 1.0);
        const double lhs = (a * b).norm();
        const double rhs = a.norm() * b.norm();
        worst_norm = std::max(worst_norm, std::fabs(lhs - rhs) / std::max({1.0, lhs, rhs}));
        const octrmt::Octonion left = a * (a * b) - (a * a) * b;
        const octrmt::Octonion right = (b * a) * a - b * (a * a);
        const double scale = std::max(1.0, a.norm_sq() * b.norm());
        worst_alt = std::max(worst_alt, std::max(left.norm(), right.norm()) / scale);
    }
    ok = ok && worst_norm <= 1e-12 && worst_alt <= 1e-12;

    const double secs = t.seconds();
    detail = "table " + std::to_string(table_matches) + "/64, norm-mult " + fmt(worst_norm) +
             ", alternativity " + fmt(worst_alt);
    record("criterion-1 algebra-suite", ok && secs < 10.0, detail, secs);
}

// ------------------------------------------------------------------
void criterion2_embedding_degeneracy() {
    Timer t;
    bool ok = true;

    double worst2 = 0.0;
    octrmt::RngStream g2(20202, 0);
    for (int k = 0; k < 100; ++k) {
        const octrmt::HermOct2 h = octrmt::sample_gauss_oct2(g2);
        const auto eig = octrmt::sym_eigen(octrmt::real_embedding<2>(h));
        const auto clusters = octrmt::degeneracy_profile(eig, 1e-8);
        if (clusters.size() != 2 || clusters[0].multiplicity != 8 ||
            clusters[1].multiplicity != 8) {
            ok = false;
            continue;
        }
        const octrmt::Spectrum2 s = octrmt::eigen2(h);
        for (int i = 0; i < 2; ++i)
            worst2 = std::max(worst2,
                              std::fabs(clusters[static_cast<std::size_t>(i)].value -
                                        s.lambda[static_cast<std::size_t>(i)]) /
                                  std::max(1.0, std::fabs(s.lambda[static_cast<std::size_t>(i)])));
    }
    ok = ok && worst2 <= 1e-9;

    double worst3 = 0.0;
    octrmt::RngStream g3(30303, 0);
    for (int k = 0; k < 100; ++k) {
        const octrmt::HermOct3 h = octrmt::sample_gauss_oct3(g3);
        const auto eig = octrmt::sym_eigen(octrmt::real_embedding<3>(h));
        const auto clusters = octrmt::degeneracy_profile(eig, 1e-8);
        if (clusters.size() != 6) {
            ok = false;
            continue;
        }
        for (const auto& c : clusters)
            if (c.multiplicity != 4) ok = false;
        double sum = 0.0;
        for (double e : eig) sum += e;
        const double target = 8.0 * octrmt::invariants3(h).trace;
        worst3 = std::max(worst3, std::fabs(sum - target) / std::max(1.0, std::fabs(target)));
    }
    ok = ok && worst3 <= 1e-8;

    const double secs = t.seconds();
    record("criterion-2 embedding-degeneracy", ok && secs < 60.0,
           "n2 cluster error " + fmt(worst2) + ", n3 trace error " + fmt(worst3), secs);
}

// ------------------------------------------------------------------
void criterion3_jordan_spectral() {
    Timer t;
    double worst_res = 0.0, worst_vieta = 0.0, worst_tr2 = 0.0, worst_proj = 0.0;
    octrmt::RngStream g(40404, 0);
    for (int k = 0; k < 10000; ++k) {
        const octrmt::HermOct3 h = octrmt::sample_gauss_oct3(g);
        const octrmt::Invariants3 inv = octrmt::invariants3(h);
        const octrmt::Spectrum3 s = octrmt::eigen3_from_invariants(inv);
        const double l0 = s.lambda[0], l1 = s.lambda[1], l2 = s.lambda[2];
        const double scale = std::max({1.0, std::fabs(l0), std::fabs(l2)});
        const double s2 = scale * scale, s3 = scale * scale * scale;
        for (double l : s.lambda)
            worst_res = std::max(worst_res,
                                 std::fabs(((l - inv.trace) * l + inv.sigma) * l - inv.det) / s3);
        worst_vieta = std::max(worst_vieta, std::fabs(l0 + l1 + l2 - inv.trace) / scale);
        worst_vieta = std::max(worst_vieta,
                               std::fabs(l0 * l1 + l0 * l2 + l1 * l2 - inv.sigma) / s2);
        worst_vieta = std::max(worst_vieta, std::fabs(l0 * l1 * l2 - inv.det) / s3);
        worst_tr2 = std::max(worst_tr2,
                             std::fabs(octrmt::trace_square(h) - (l0 * l0 + l1 * l1 + l2 * l2)) / s2);

        const octrmt::ProjectorTriple p = octrmt::eigen_projectors(h, s);
        worst_proj = std::max(worst_proj,
                              herm_norm(p.p[0] + p.p[1] + p.p[2] - octrmt::HermOct3::identity()));
        worst_proj = std::max(worst_proj,
                              herm_norm(l0 * p.p[0] + l1 * p.p[1] + l2 * p.p[2] - h) /
                                  std::max(1.0, herm_norm(h)));
        for (int i = 0; i < 3; ++i) {
            const octrmt::HermOct3& pi = p.p[static_cast<std::size_t>(i)];
            worst_proj = std::max(worst_proj, herm_norm(jordan_product(pi, pi) - pi));
            for (int j = i + 1; j < 3; ++j)
                worst_proj = std::max(worst_proj,
                                      herm_norm(jordan_product(pi, p.p[static_cast<std::size_t>(j)])));
        }
    }
    const bool ok = worst_res <= 1e-9 && worst_vieta <= 1e-9 && worst_tr2 <= 1e-9 &&
                    worst_proj <= 1e-8;
    const double secs = t.seconds();
    record("criterion-3 jordan-spectral-suite", ok && secs < 30.0,
           "residual " + fmt(worst_res) + ", vieta " + fmt(worst_vieta) + ", trace-sq " +
               fmt(worst_tr2) + ", projectors " + fmt(worst_proj),
           secs);
}

// ------------------------------------------------------------------
void criterion4_spacing() {
    Timer t;
    octrmt::EnsembleSpec spec;
    spec.kind = octrmt::Ensemble::gauss2;
    spec.trials = 100000;
    spec.seed = 50505;
    spec.bins = 60;
    spec.workers = hw_workers();
    const octrmt::RunResult r2 = octrmt::run_spacing(spec);
    const double ks2 = r2.stats[0].second;

    spec.kind = octrmt::Ensemble::gauss3;
    const octrmt::RunResult r3 = octrmt::run_spacing(spec);
    const double ks21 = r3.stats[0].second;
    const double ks32 = r3.stats[1].second;

    const bool ok = ks2 <= 0.02 && ks21 <= 0.05 && ks32 <= 0.05;
    const double secs = t.seconds();
    record("criterion-4 spacing-reproduction", ok && secs < 120.0,
           "gauss2 ks " + fmt(ks2) + " (<=0.02), gauss3 ks " + fmt(ks21) + "/" + fmt(ks32) +
               " (<=0.05)",
           secs);
}

// ------------------------------------------------------------------
void criterion5_smallest() {
    Timer t;
    octrmt::EnsembleSpec spec;
    spec.kind = octrmt::Ensemble::wishart2;
    spec.trials = 100000;
    spec.seed = 60606;
    spec.bins = 60;
    spec.workers = hw_workers();

    spec.n = 2;
    const double ks_n2 = *octrmt::run_smallest(spec).ks;
    spec.n = 3;
    const double ks_n3 = *octrmt::run_smallest(spec).ks;

    // same-law cross check between the rectangular and triangular routes
    const long long m = 100000;
    std::vector<double> wish(static_cast<std::size_t>(m)), chol(static_cast<std::size_t>(m));
    octrmt::parallel_for(m, hw_workers(), [&](long long k) {
        octrmt::RngStream gw(70707, static_cast<std::uint64_t>(k));
        wish[static_cast<std::size_t>(k)] =
            octrmt::eigen2(octrmt::sample_wishart_oct2(gw, 2)).lambda[0];
        octrmt::RngStream gc(80808, static_cast<std::uint64_t>(k));
        chol[static_cast<std::size_t>(k)] =
            octrmt::eigen2(octrmt::sample_cholesky_oct2(gc, 3.0)).lambda[0];
    });
    const double ks_two = octrmt::ks_two_sample(wish, chol);

    const bool ok = ks_n2 <= 0.02 && ks_n3 <= 0.02 && ks_two <= 0.015;
    const double secs = t.seconds();
    record("criterion-5 smallest-eigenvalue-reproduction", ok && secs < 180.0,
           "wishart n2 ks " + fmt(ks_n2) + ", n3 ks " + fmt(ks_n3) +
               " (<=0.02), wishart-vs-cholesky ks " + fmt(ks_two) + " (<=0.015)",
           secs);
}

// ------------------------------------------------------------------
void criterion6_gamma_identity() {
    Timer t;
    const long long m = 100000;
    std::vector<double> bb(static_cast<std::size_t>(m)), direct(static_cast<std::size_t>(m));
    octrmt::parallel_for(m, hw_workers(), [&](long long k) {
        octrmt::RngStream g1(90909, static_cast<std::uint64_t>(k));
        bb[static_cast<std::size_t>(k)] = octrmt::sample_gauss_oct2(g1).upper[0].norm_sq();
        octrmt::RngStream g2(11111, static_cast<std::uint64_t>(k));
        direct[static_cast<std::size_t>(k)] = octrmt::sample_gamma(g2, 4.0, 1.0);
    });
    const double ks = octrmt::ks_two_sample(bb, direct);
    const double secs = t.seconds();
    record("criterion-6 gamma-identity", ks <= 0.01 && secs < 30.0,
           "two-sample ks " + fmt(ks) + " (<=0.01)", secs);
}

// ------------------------------------------------------------------
void criterion7_breakdown_experiments() {
    Timer t;
    octrmt::EnsembleSpec det_spec;
    det_spec.kind = octrmt::Ensemble::tri3_det;
    det_spec.trials = 10000;
    det_spec.seed = 123123;
    det_spec.a_param = 1.0;
    det_spec.workers = hw_workers();
    const double fraction = octrmt::run_detsign(det_spec).stats[0].second;
    const bool det_ok = fraction >= 0.50 && fraction <= 0.60;

    octrmt::EnsembleSpec j_spec;
    j_spec.kind = octrmt::Ensemble::tri3_jordan;
    j_spec.trials = 100000;
    j_spec.seed = 321321;
    j_spec.a_param = 1.0;
    j_spec.workers = hw_workers();
    const double rate = octrmt::run_jordan_positivity(j_spec).stats[0].second;
    const bool jordan_ok = rate <= 0.005;

    const double secs = t.seconds();
    // det_ok cannot hold: trace-associativity forces det = (t11 t22 t33)^2.
    record("criterion-7 triangular-breakdown-experiments",
           det_ok && jordan_ok && secs < 120.0,
           "negative-det fraction " + fmt(fraction) +
               " (target [0.50,0.60]; identically +1 by trace-associativity), jordan negative rate " +
               fmt(rate) + " (<=0.005)",
           secs);
}

// ------------------------------------------------------------------
void criterion8_surmise_moments() {
    Timer t;
    const octrmt::SurmiseMoments m = octrmt::surmise_moments(4.0);
    const bool var_ok = std::fabs(m.variance - 0.10447) <= 5e-5;
    // quoted target 0.35939; the exact value of this functional is 0.354242...
    const bool skew_ok = std::fabs(m.skewness - 0.35939) <= 5e-5;

    double worst_mass = 0.0, worst_mean = 0.0;
    for (double beta : {1.0, 2.0, 4.0, 8.0}) {
        const octrmt::SurmiseParams p = octrmt::SurmiseParams::make(beta);
        const double mass =
            octrmt::quadrature_half_line([&p](double s) { return p.pdf(s); }, 0.0);
        const double mean =
            octrmt::quadrature_half_line([&p](double s) { return s * p.pdf(s); }, 0.0);
        worst_mass = std::max(worst_mass, std::fabs(mass - 1.0));
        worst_mean = std::max(worst_mean, std::fabs(mean - 1.0));
    }
    const bool norm_ok = worst_mass <= 1e-10 && worst_mean <= 1e-10;

    const double secs = t.seconds();
    record("criterion-8 surmise-moments", var_ok && skew_ok && norm_ok,
           "variance " + fmt(m.variance) + " (target 0.10447), skewness " + fmt(m.skewness) +
               " (target 0.35939; exact functional value 0.354242), normalization err " +
               fmt(worst_mass) + ", mean err " + fmt(worst_mean),
           secs);
}

// ------------------------------------------------------------------
void criterion9_determinism() {
    Timer t;
    bool ok = true;

    octrmt::EnsembleSpec spec;
    spec.kind = octrmt::Ensemble::gauss3;
    spec.trials = 20000;
    spec.seed = 777777;
    spec.bins = 40;

    spec.workers = 1;
    const octrmt::RunResult a = octrmt::run_spacing(spec);
    const octrmt::RunResult b = octrmt::run_spacing(spec);
    spec.workers = 5;
    const octrmt::RunResult c = octrmt::run_spacing(spec);
    ok = ok && octrmt::to_csv(a) == octrmt::to_csv(b);
    ok = ok && octrmt::to_csv(a) == octrmt::to_csv(c);
    ok = ok && octrmt::to_json_string(a) == octrmt::to_json_string(c);

    octrmt::EnsembleSpec wspec;
    wspec.kind = octrmt::Ensemble::wishart2;
    wspec.trials = 20000;
    wspec.seed = 888888;
    wspec.n = 3;
    wspec.workers = 1;
    const std::string w1 = octrmt::to_json_string(octrmt::run_smallest(wspec));
    wspec.workers = 7;
    const std::string w2 = octrmt::to_json_string(octrmt::run_smallest(wspec));
    ok = ok && w1 == w2;

    octrmt::EnsembleSpec dspec;
    dspec.kind = octrmt::Ensemble::tri3_det;
    dspec.trials = 5000;
    dspec.seed = 999999;
    dspec.workers = 1;
    const std::string d1 = octrmt::to_csv(octrmt::run_detsign(dspec));
    dspec.workers = 3;
    const std::string d2 = octrmt::to_csv(octrmt::run_detsign(dspec));
    ok = ok && d1 == d2;

    record("criterion-9 determinism", ok, "byte-identical payloads across reruns and worker counts",
           t.seconds());
}

} // namespace

int main() {
    criterion1_algebra();
    criterion2_embedding_degeneracy();
    criterion3_jordan_spectral();
    criterion4_spacing();
    criterion5_smallest();
    criterion6_gamma_identity();
    criterion7_breakdown_experiments();
    criterion8_surmise_moments();
    criterion9_determinism();

    int failures = 0;
    for (const auto& c : g_results)
        if (!c.pass) ++failures;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(g_results.size()) - failures,
                g_results.size());
    if (failures > 0)
        std::printf("failing criteria encode reference targets ruled out by the algebra; "
                    "see the notes at the top of this file\n");
    return failures == 0 ? 0 : 1;
}
