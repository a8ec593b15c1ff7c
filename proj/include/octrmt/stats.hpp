#pragma once

#include <functional>
#include <span>
#include <vector>

namespace octrmt {

/// Adaptive Simpson integration with absolute error target 1e-10 (floored at
/// machine-relative accuracy for large integrals). Throws numeric_error if
/// the refinement depth is exhausted.
double quadrature(const std::function<double(double)>& f, double a, double b);

/// Integral over [a, inf) of an (eventually) decaying integrand: dyadic
/// panels are accumulated until two consecutive panels contribute less than
/// 1e-12 of the running total. Throws numeric_error if the tail never decays.
double quadrature_half_line(const std::function<double(double)>& f, double a);

/// Unit-mean spacing density p(s) = s^beta exp(-c_tilde s^2) / C with
///   c_tilde = (Gamma(beta/2+1)/Gamma(beta/2+1/2))^2,
///   C = 1/2 c_tilde^{-(beta+1)/2} Gamma((beta+1)/2).
struct SurmiseParams {
    double beta;
    double c_tilde;
    double norm_c;

    static SurmiseParams make(double beta);
    double pdf(double s) const;
};

double wigner_surmise_pdf(double s, double beta);

struct SurmiseMoments {
    double variance;
    double skewness;
    double excess_kurtosis;
};

/// Central moments of the unit-mean surmise, computed by quadrature.
SurmiseMoments surmise_moments(double beta);

/// Smallest-eigenvalue density of the 2x2 Wishart-type ensemble with n >= 2
/// rows and rate c = 1/2:
///   p(s) ∝ exp(-2cs) s^{4n-5} sum_l binom(4n-5,l) (4n+3-l)! c^{l-(4n+4)} s^l.
/// The polynomial coefficients come from term-by-term integration of
/// int_0^inf exp(-cx) x^8 (s+x)^{4n-5} dx; the normalization constant is
/// computed numerically.
class SmallestEigLaw {
public:
    static SmallestEigLaw make(int n);

    int n() const { return n_; }
    double c() const { return 0.5; }
    const std::vector<double>& coefficients() const { return coeff_; }
    double normalization() const { return norm_; }

    double pdf(double s) const;
    double unnormalized(double s) const;

private:
    int n_ = 0;
    std::vector<double> coeff_; // ascending powers of s
    double norm_ = 1.0;
};

double smallest_eig_pdf(double s, int n);

/// Piecewise-linear CDF built by cumulative Simpson integration of a pdf on
/// a uniform grid over [0, hi]; monotone nondecreasing by construction.
class TabulatedCdf {
public:
    static TabulatedCdf from_pdf(const std::function<double(double)>& pdf,
                                 double hi, int cells = 200000);

    double operator()(double x) const;
    double grid_hi() const { return hi_; }
    double total_mass() const { return f_.back(); }

private:
    double hi_ = 0.0;
    double step_ = 0.0;
    std::vector<double> f_;
};

/// Uniform-bin histogram; density integrates to one: sum density*width = 1.
struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<std::size_t> counts;
    std::size_t total = 0;

    static Histogram build(std::span<const double> data, int bins, double lo, double hi);

    double bin_width() const { return (hi - lo) / static_cast<double>(counts.size()); }
    double bin_center(int i) const { return lo + (i + 0.5) * bin_width(); }
    std::vector<double> density() const;
    std::vector<double> edges() const;
};

/// One-sample Kolmogorov-Smirnov statistic against a reference CDF.
/// Input samples must be sorted ascending.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic; the inputs need not be sorted.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Divides every spacing by the sample mean, so the result has mean one.
/// Throws std::invalid_argument on empty input.
std::vector<double> unfold_to_unit_mean(std::vector<double> spacings);

} // namespace octrmt
