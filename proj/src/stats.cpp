#include "octrmt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "octrmt/errors.hpp"

namespace octrmt {

namespace {

constexpr double kAbsTol = 1e-10;

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa,
             double b, double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    // The relative floor keeps termination reachable when the integral is
    // many orders of magnitude above the absolute target.
    if (std::fabs(delta) <= 15.0 * std::max(tol, 1e-15 * std::fabs(left + right)))
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw numeric_error("quadrature: adaptive refinement did not converge", delta);
    return adapt(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1) +
           adapt(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1);
}

} // namespace

double quadrature(const std::function<double(double)>& f, double a, double b) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(a, fa, b, fb, fm);
    return adapt(f, a, fa, b, fb, fm, whole, kAbsTol, 48);
}

double quadrature_half_line(const std::function<double(double)>& f, double a) {
    double acc = quadrature(f, a, a + 1.0);
    double left = a + 1.0;
    double width = 1.0;
    int quiet_panels = 0;
    for (int k = 0; k < 80; ++k) {
        const double right = left + width;
        const double panel = quadrature(f, left, right);
        acc += panel;
        if (std::fabs(panel) <= 1e-12 * std::max(std::fabs(acc), 1e-300)) {
            if (++quiet_panels >= 2) return acc;
        } else {
            quiet_panels = 0;
        }
        left = right;
        width *= 2.0;
    }
    throw numeric_error("quadrature_half_line: tail did not decay", acc);
}

SurmiseParams SurmiseParams::make(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("surmise: beta must be positive");
    SurmiseParams p;
    p.beta = beta;
    p.c_tilde = std::exp(2.0 * (std::lgamma(beta / 2.0 + 1.0) - std::lgamma(beta / 2.0 + 0.5)));
    p.norm_c = 0.5 * std::exp(std::lgamma((beta + 1.0) / 2.0)
                              - 0.5 * (beta + 1.0) * std::log(p.c_tilde));
    return p;
}

double SurmiseParams::pdf(double s) const {
    if (s < 0.0) return 0.0;
    if (s == 0.0) return 0.0;
    return std::pow(s, beta) * std::exp(-c_tilde * s * s) / norm_c;
}

double wigner_surmise_pdf(double s, double beta) {
    return SurmiseParams::make(beta).pdf(s);
}

SurmiseMoments surmise_moments(double beta) {
    const SurmiseParams p = SurmiseParams::make(beta);
    const auto moment = [&p](int k) {
        return quadrature_half_line(
            [&p, k](double s) { return std::pow(s, k) * p.pdf(s); }, 0.0);
    };
    const double m1 = moment(1);
    const auto central = [&p, m1](int k) {
        return quadrature_half_line(
            [&p, m1, k](double s) { return std::pow(s - m1, k) * p.pdf(s); }, 0.0);
    };
    const double mu2 = central(2);
    const double mu3 = central(3);
    const double mu4 = central(4);

    SurmiseMoments out;
    out.variance = mu2;
    out.skewness = mu3 / std::pow(mu2, 1.5);
    out.excess_kurtosis = mu4 / (mu2 * mu2) - 3.0;
    return out;
}

SmallestEigLaw SmallestEigLaw::make(int n) {
    if (n < 2) throw std::invalid_argument("SmallestEigLaw: n must be at least 2");
    SmallestEigLaw law;
    law.n_ = n;
    const int m = 4 * n - 5;
    const double c = 0.5;
    law.coeff_.resize(static_cast<std::size_t>(m) + 1);
    for (int l = 0; l <= m; ++l) {
        const double log_binom = std::lgamma(m + 1.0) - std::lgamma(l + 1.0)
                               - std::lgamma(m - l + 1.0);
        const double log_fact = std::lgamma(4.0 * n + 4.0 - l);
        const double log_cpow = (l - (4.0 * n + 4.0)) * std::log(c);
        law.coeff_[static_cast<std::size_t>(l)] = std::exp(log_binom + log_fact + log_cpow);
    }
    law.norm_ = quadrature_half_line([&law](double s) { return law.unnormalized(s); }, 0.0);
    return law;
}

double SmallestEigLaw::unnormalized(double s) const {
    if (s <= 0.0) return 0.0;
    double poly = 0.0;
    for (std::size_t l = coeff_.size(); l-- > 0;) poly = poly * s + coeff_[l];
    const int m = 4 * n_ - 5;
    return std::exp(-2.0 * c() * s + m * std::log(s)) * poly;
}

double SmallestEigLaw::pdf(double s) const { return unnormalized(s) / norm_; }

double smallest_eig_pdf(double s, int n) { return SmallestEigLaw::make(n).pdf(s); }

TabulatedCdf TabulatedCdf::from_pdf(const std::function<double(double)>& pdf,
                                    double hi, int cells) {
    if (!(hi > 0.0) || cells < 1) throw std::invalid_argument("TabulatedCdf: bad grid");
    TabulatedCdf t;
    t.hi_ = hi;
    t.step_ = hi / cells;
    t.f_.resize(static_cast<std::size_t>(cells) + 1);
    t.f_[0] = 0.0;
    double prev = pdf(0.0);
    for (int i = 0; i < cells; ++i) {
        const double x0 = i * t.step_;
        const double x1 = x0 + t.step_;
        const double mid = pdf(x0 + 0.5 * t.step_);
        const double next = pdf(x1);
        t.f_[static_cast<std::size_t>(i) + 1] =
            t.f_[static_cast<std::size_t>(i)] + t.step_ / 6.0 * (prev + 4.0 * mid + next);
        prev = next;
    }
    return t;
}

double TabulatedCdf::operator()(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= hi_) return f_.back();
    const double pos = x / step_;
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return f_[i] + frac * (f_[i + 1] - f_[i]);
}

Histogram Histogram::build(std::span<const double> data, int bins, double lo, double hi) {
    if (bins < 1 || !(hi > lo)) throw std::invalid_argument("Histogram: bad layout");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    const double w = (hi - lo) / bins;
    for (double x : data) {
        if (x < lo || x > hi) throw std::invalid_argument("Histogram: sample outside range");
        auto idx = static_cast<std::size_t>((x - lo) / w);
        if (idx >= h.counts.size()) idx = h.counts.size() - 1;
        ++h.counts[idx];
    }
    h.total = data.size();
    return h;
}

std::vector<double> Histogram::density() const {
    std::vector<double> d(counts.size());
    const double scale = 1.0 / (static_cast<double>(total) * bin_width());
    for (std::size_t i = 0; i < counts.size(); ++i)
        d[i] = static_cast<double>(counts[i]) * scale;
    return d;
}

std::vector<double> Histogram::edges() const {
    std::vector<double> e(counts.size() + 1);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = lo + static_cast<double>(i) * bin_width();
    return e;
}

double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_samples.size();
    if (n == 0) throw std::invalid_argument("ks_statistic: empty sample");
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_samples[i]);
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        d = std::max({d, f - lo, hi - f});
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

std::vector<double> unfold_to_unit_mean(std::vector<double> spacings) {
    if (spacings.empty()) throw std::invalid_argument("unfold: empty spacing pool");
    double sum = 0.0;
    for (double s : spacings) sum += s;
    const double mean = sum / static_cast<double>(spacings.size());
    if (!(mean > 0.0)) throw std::invalid_argument("unfold: nonpositive mean spacing");
    for (double& s : spacings) s /= mean;
    return spacings;
}

} // namespace octrmt
