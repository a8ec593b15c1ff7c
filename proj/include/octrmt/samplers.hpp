#pragma once

#include "octrmt/matrices.hpp"
#include "octrmt/rng.hpp"

namespace octrmt {

double sample_gaussian(RngStream& g, double mean, double sigma);

/// Gamma(shape, scale) by the Marsaglia-Tsang squeeze method; shape < 1 is
/// handled with the boost transformation gamma(shape+1) * U^{1/shape}.
double sample_gamma(RngStream& g, double shape, double scale);

/// Octonion with the eight coefficients drawn i.i.d. N(0, sigma).
Octonion sample_gaussian_octonion(RngStream& g, double sigma);

/// 2x2 Gaussian Hermitian ensemble: diagonal entries standard normal, the
/// eight off-diagonal coefficients N(0, 1/sqrt(2)). Draw order: diag(0),
/// diag(1), then the off-diagonal coefficients.
HermOct2 sample_gauss_oct2(RngStream& g);

/// 3x3 Gaussian Hermitian ensemble: diagonal standard normal, off-diagonal
/// coefficients N(0, 1/sqrt(2)). Draw order: diag(0..2), x12, x13, x23.
HermOct3 sample_gauss_oct3(RngStream& g);

/// W = X^dag X for an n x 2 matrix of standard-Gaussian octonions, row-major
/// draw order. Requires n >= 2.
HermOct2 sample_wishart_oct2(RngStream& g, int n);

/// W = T^dag T for upper-triangular T with t11 = sqrt(Gamma[a+1,2]),
/// t22 = sqrt(Gamma[a+5,2]) and t12 a standard-Gaussian octonion.
/// Requires a_param > -1. Draw order: s1, s2, t12.
HermOct2 sample_cholesky_oct2(RngStream& g, double a_param);

struct DetSignSample {
    HermOct3 w;
    double det;
    int det_sign; // +1 or -1 (0 only for an exactly zero determinant)
};

/// 3x3 upper-triangular construction: t_ii = sqrt(Gamma[a + 4(i-1), 2]),
/// off-diagonal entries standard-Gaussian octonions. Returns W = T^dag T
/// (computed through oct_mat_mul, Hermitian content extracted) together
/// with the sign of its determinant. Requires a_param > 0.
/// Draw order: s1, s2, s3, t12, t13, t23.
DetSignSample sample_tri3_detsign(RngStream& g, double a_param);

/// Same triangular construction, returning (T^dag T + T T^dag)/2.
/// With diagonal_only set, the off-diagonal draws are zeroed (the result is
/// then diag(t_ii^2)); the stream consumes the same number of variates.
HermOct3 sample_tri3_jordan(RngStream& g, double a_param, bool diagonal_only = false);

} // namespace octrmt
