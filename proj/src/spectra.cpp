#include "octrmt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "octrmt/errors.hpp"

namespace octrmt {

Spectrum2 eigen2(const HermOct2& h) {
    const double a = h.diag[0];
    const double c = h.diag[1];
    const double tr = a + c;
    const double det = a * c - h.upper[0].norm_sq();
    const double disc = (a - c) * (a - c) + 4.0 * h.upper[0].norm_sq();
    const double sq = std::sqrt(disc);

    double big, small;
    if (tr >= 0.0) {
        big = 0.5 * (tr + sq);
        small = (big != 0.0) ? det / big : 0.0;
    } else {
        small = 0.5 * (tr - sq);
        big = (small != 0.0) ? det / small : 0.0;
    }
    Spectrum2 s;
    s.lambda = {std::min(big, small), std::max(big, small)};
    return s;
}

namespace {

double cubic_value(double tr, double sigma, double det, double x) {
    return ((x - tr) * x + sigma) * x - det;
}

double cubic_derivative(double tr, double sigma, double x) {
    return (3.0 * x - 2.0 * tr) * x + sigma;
}

} // namespace

Spectrum3 eigen3_from_invariants(const Invariants3& inv) {
    const double tr = inv.trace;
    const double shift = tr / 3.0;
    const double p = inv.sigma - tr * tr / 3.0;
    const double q = -2.0 * tr * tr * tr / 27.0 + inv.sigma * shift - inv.det;

    const double scale = std::max({1.0, std::sqrt(std::fabs(p)), std::cbrt(std::fabs(q))});
    const double s2 = scale * scale;

    std::array<double, 3> t{};
    // discriminant of t^3 + p t + q; non-negative iff the three roots are real
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (disc < -1e-10 * s2 * s2 * s2) {
        throw numeric_error("eigen3: characteristic cubic has complex roots", disc);
    }

    if (p < 0.0) {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double u = 3.0 * q / (p * m);
        u = std::clamp(u, -1.0, 1.0);
        const double theta = std::acos(u) / 3.0;
        constexpr double kTwoPiThird = 2.0943951023931953;
        for (int k = 0; k < 3; ++k)
            t[static_cast<std::size_t>(k)] = m * std::cos(theta - kTwoPiThird * k);
    } else {
        // p >= 0 with a non-negative discriminant forces p ~ q ~ 0: a
        // (numerically) triple root at the shift point.
        t = {0.0, 0.0, 0.0};
    }

    Spectrum3 s;
    for (int k = 0; k < 3; ++k) {
        double x = t[static_cast<std::size_t>(k)] + shift;
        const double d = cubic_derivative(tr, inv.sigma, x);
        if (std::fabs(d) > 1e-14 * s2) x -= cubic_value(tr, inv.sigma, inv.det, x) / d;
        s.lambda[static_cast<std::size_t>(k)] = x;
    }
    std::sort(s.lambda.begin(), s.lambda.end());
    return s;
}

Spectrum3 eigen3(const HermOct3& h) { return eigen3_from_invariants(invariants3(h)); }

ProjectorTriple eigen_projectors(const HermOct3& h, const Spectrum3& s) {
    const double l0 = s.lambda[0], l1 = s.lambda[1], l2 = s.lambda[2];
    const double scale = std::max({1.0, std::fabs(l0), std::fabs(l1), std::fabs(l2)});
    const double min_gap = std::min({l1 - l0, l2 - l1, l2 - l0});
    if (min_gap <= 1e-6 * scale)
        throw degeneracy_error("eigen_projectors: spectrum too close to degenerate");

    const HermOct3 h2 = jordan_product(h, h);
    const HermOct3 id = HermOct3::identity();

    ProjectorTriple out;
    const std::array<std::array<double, 2>, 3> others = {{{l1, l2}, {l0, l2}, {l0, l1}}};
    for (int i = 0; i < 3; ++i) {
        const double lj = others[static_cast<std::size_t>(i)][0];
        const double lk = others[static_cast<std::size_t>(i)][1];
        const double li = s.lambda[static_cast<std::size_t>(i)];
        HermOct3 num = h2 - (lj + lk) * h + (lj * lk) * id;
        out.p[static_cast<std::size_t>(i)] = num * (1.0 / ((li - lj) * (li - lk)));
    }
    return out;
}

namespace {

double frobenius_sq(const SymMatrix& m) {
    double s = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) s += m.at(r, c) * m.at(r, c);
    return s;
}

double offdiag_sq(const SymMatrix& m) {
    double s = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            if (r != c) s += m.at(r, c) * m.at(r, c);
    return s;
}

} // namespace

std::vector<double> sym_eigen(SymMatrix m) {
    const int n = m.dim();
    if (n > 64) throw std::invalid_argument("sym_eigen: dimension larger than 64");
    if (n == 0) return {};

    const double norm = std::sqrt(frobenius_sq(m));
    const double threshold = 1e-13 * norm;

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (std::sqrt(offdiag_sq(m)) <= threshold) {
            std::vector<double> eig(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = m.at(i, i);
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double mkp = m.at(k, p);
                    const double mkq = m.at(k, q);
                    m.raw(k, p) = c * mkp - s * mkq;
                    m.raw(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = m.at(p, k);
                    const double mqk = m.at(q, k);
                    m.raw(p, k) = c * mpk - s * mqk;
                    m.raw(q, k) = s * mpk + c * mqk;
                }
            }
        }
    }
    throw numeric_error("sym_eigen: Jacobi iteration did not converge in 100 sweeps",
                        std::sqrt(offdiag_sq(m)));
}

std::vector<Cluster> degeneracy_profile(std::span<const double> sorted_eigs, double tol) {
    std::vector<Cluster> out;
    if (sorted_eigs.empty()) return out;

    double sum = sorted_eigs[0];
    int count = 1;
    for (std::size_t i = 1; i < sorted_eigs.size(); ++i) {
        const double prev = sorted_eigs[i - 1];
        const double cur = sorted_eigs[i];
        const double gate = tol * std::max({1.0, std::fabs(prev), std::fabs(cur)});
        if (cur - prev > gate) {
            out.push_back({sum / count, count});
            sum = cur;
            count = 1;
        } else {
            sum += cur;
            ++count;
        }
    }
    out.push_back({sum / count, count});
    return out;
}

} // namespace octrmt
