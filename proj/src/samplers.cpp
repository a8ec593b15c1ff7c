#include "octrmt/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace octrmt {

double sample_gaussian(RngStream& g, double mean, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sample_gaussian: sigma must be positive");
    return mean + sigma * g.normal();
}

double sample_gamma(RngStream& g, double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("sample_gamma: shape and scale must be positive");
    if (shape < 1.0) {
        const double boost = std::pow(g.next_unit_open(), 1.0 / shape);
        return sample_gamma(g, shape + 1.0, scale) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = g.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = g.next_unit_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
}

Octonion sample_gaussian_octonion(RngStream& g, double sigma) {
    Octonion o;
    for (int k = 0; k < 8; ++k) o.c[static_cast<std::size_t>(k)] = sigma * g.normal();
    return o;
}

namespace {
constexpr double kInvSqrt2 = 0.7071067811865476;
}

HermOct2 sample_gauss_oct2(RngStream& g) {
    HermOct2 h;
    h.diag[0] = g.normal();
    h.diag[1] = g.normal();
    h.upper[0] = sample_gaussian_octonion(g, kInvSqrt2);
    return h;
}

HermOct3 sample_gauss_oct3(RngStream& g) {
    HermOct3 h;
    for (int i = 0; i < 3; ++i) h.diag[static_cast<std::size_t>(i)] = g.normal();
    for (int k = 0; k < 3; ++k) h.upper[static_cast<std::size_t>(k)] = sample_gaussian_octonion(g, kInvSqrt2);
    return h;
}

HermOct2 sample_wishart_oct2(RngStream& g, int n) {
    if (n < 2) throw std::invalid_argument("sample_wishart_oct2: n must be at least 2");
    OctMatrix x(n, 2);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < 2; ++c) x(r, c) = sample_gaussian_octonion(g, 1.0);
    return conj_transpose_product<2>(x);
}

HermOct2 sample_cholesky_oct2(RngStream& g, double a_param) {
    if (!(a_param > -1.0))
        throw std::invalid_argument("sample_cholesky_oct2: a_param must exceed -1");
    const double t11 = std::sqrt(sample_gamma(g, a_param + 1.0, 2.0));
    const double t22 = std::sqrt(sample_gamma(g, a_param + 5.0, 2.0));
    OctMatrix t(2, 2);
    t(0, 0) = Octonion(t11);
    t(0, 1) = sample_gaussian_octonion(g, 1.0);
    t(1, 1) = Octonion(t22);
    return conj_transpose_product<2>(t);
}

namespace {

OctMatrix sample_tri3_matrix(RngStream& g, double a_param, bool diagonal_only) {
    if (!(a_param > 0.0))
        throw std::invalid_argument("tri3 construction requires a_param > 0");
    OctMatrix t(3, 3);
    for (int i = 0; i < 3; ++i)
        t(i, i) = Octonion(std::sqrt(sample_gamma(g, a_param + 4.0 * i, 2.0)));
    t(0, 1) = sample_gaussian_octonion(g, 1.0);
    t(0, 2) = sample_gaussian_octonion(g, 1.0);
    t(1, 2) = sample_gaussian_octonion(g, 1.0);
    if (diagonal_only) {
        t(0, 1) = Octonion{};
        t(0, 2) = Octonion{};
        t(1, 2) = Octonion{};
    }
    return t;
}

} // namespace

DetSignSample sample_tri3_detsign(RngStream& g, double a_param) {
    const OctMatrix t = sample_tri3_matrix(g, a_param, false);
    const OctMatrix w_full = oct_mat_mul(conj_transpose(t), t);
    DetSignSample out;
    out.w = hermitian_part<3>(w_full);
    out.det = invariants3(out.w).det;
    out.det_sign = (out.det > 0.0) ? 1 : (out.det < 0.0 ? -1 : 0);
    return out;
}

HermOct3 sample_tri3_jordan(RngStream& g, double a_param, bool diagonal_only) {
    const OctMatrix t = sample_tri3_matrix(g, a_param, diagonal_only);
    const OctMatrix td = conj_transpose(t);
    const OctMatrix w1 = oct_mat_mul(td, t);
    const OctMatrix w2 = oct_mat_mul(t, td);
    OctMatrix sym(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sym(i, j) = 0.5 * (w1(i, j) + w2(i, j));
    return hermitian_part<3>(sym);
}

} // namespace octrmt
