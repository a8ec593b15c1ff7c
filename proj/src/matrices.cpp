#include "octrmt/matrices.hpp"

#include <cmath>
#include <stdexcept>

#include "octrmt/errors.hpp"

namespace octrmt {

OctMatrix OctMatrix::identity(int n) {
    OctMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Octonion::one();
    return m;
}

OctMatrix oct_mat_mul(const OctMatrix& a, const OctMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("oct_mat_mul: inner dimensions do not match");
    OctMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            Octonion acc;
            for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    }
    return r;
}

OctMatrix conj_transpose(const OctMatrix& a) {
    OctMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j).conj();
    return r;
}

template <int N>
SymMatrix real_embedding(const HermMatrix<N>& h) {
    SymMatrix m(8 * N);
    for (int bi = 0; bi < N; ++bi) {
        const double d = h.diag[static_cast<std::size_t>(bi)];
        for (int k = 0; k < 8; ++k) m.raw(8 * bi + k, 8 * bi + k) = d;
    }
    for (int bi = 0; bi < N; ++bi) {
        for (int bj = bi + 1; bj < N; ++bj) {
            const LeftMultMatrix w =
                left_mult_matrix(h.upper[static_cast<std::size_t>(HermMatrix<N>::upper_index(bi, bj))]);
            for (int r = 0; r < 8; ++r) {
                for (int c = 0; c < 8; ++c) {
                    const double v = w.at(r, c);
                    m.raw(8 * bi + r, 8 * bj + c) = v;
                    m.raw(8 * bj + c, 8 * bi + r) = v;
                }
            }
        }
    }
    return m;
}

template SymMatrix real_embedding<2>(const HermMatrix<2>&);
template SymMatrix real_embedding<3>(const HermMatrix<3>&);

template <int N>
OctMatrix to_full(const HermMatrix<N>& h) {
    OctMatrix m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m(i, j) = h.entry(i, j);
    return m;
}

template OctMatrix to_full<2>(const HermMatrix<2>&);
template OctMatrix to_full<3>(const HermMatrix<3>&);

template <int N>
HermMatrix<N> hermitian_part(const OctMatrix& m, double tol) {
    if (m.rows() != N || m.cols() != N)
        throw std::invalid_argument("hermitian_part: wrong shape");
    double scale = 1.0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) scale = std::max(scale, m(i, j).norm());

    HermMatrix<N> h;
    for (int i = 0; i < N; ++i) {
        const Octonion& d = m(i, i);
        double imag2 = d.norm_sq() - d.c[0] * d.c[0];
        if (imag2 > tol * tol * scale * scale)
            throw numeric_error("hermitian_part: diagonal imaginary residue too large",
                                std::sqrt(std::max(imag2, 0.0)));
        h.diag[static_cast<std::size_t>(i)] = d.c[0];
    }
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            const Octonion mismatch = m(j, i) - m(i, j).conj();
            if (mismatch.norm() > tol * scale)
                throw numeric_error("hermitian_part: off-diagonal conjugate mismatch",
                                    mismatch.norm());
            h.upper[static_cast<std::size_t>(HermMatrix<N>::upper_index(i, j))] = m(i, j);
        }
    }
    return h;
}

template HermMatrix<2> hermitian_part<2>(const OctMatrix&, double);
template HermMatrix<3> hermitian_part<3>(const OctMatrix&, double);

template <int N>
HermMatrix<N> jordan_product(const HermMatrix<N>& a, const HermMatrix<N>& b) {
    const OctMatrix fa = to_full<N>(a);
    const OctMatrix fb = to_full<N>(b);
    const OctMatrix ab = oct_mat_mul(fa, fb);
    const OctMatrix ba = oct_mat_mul(fb, fa);

    HermMatrix<N> h;
    for (int i = 0; i < N; ++i)
        h.diag[static_cast<std::size_t>(i)] = 0.5 * (ab(i, i).c[0] + ba(i, i).c[0]);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            h.upper[static_cast<std::size_t>(HermMatrix<N>::upper_index(i, j))] =
                0.5 * (ab(i, j) + ba(i, j));
    return h;
}

template HermMatrix<2> jordan_product<2>(const HermMatrix<2>&, const HermMatrix<2>&);
template HermMatrix<3> jordan_product<3>(const HermMatrix<3>&, const HermMatrix<3>&);

Invariants3 invariants3(const HermOct3& h) {
    const double x11 = h.diag[0], x22 = h.diag[1], x33 = h.diag[2];
    const Octonion& x12 = h.upper[0];
    const Octonion& x13 = h.upper[1];
    const Octonion& x23 = h.upper[2];

    Invariants3 inv;
    inv.trace = x11 + x22 + x33;
    inv.sigma = x11 * x22 + x11 * x33 + x22 * x33
              - x12.norm_sq() - x13.norm_sq() - x23.norm_sq();
    // Re(x) = (x + conj(x))/2 is the scalar coefficient.
    const double re_term = (x13.conj() * (x12 * x23)).c[0];
    inv.det = x11 * x22 * x33 + 2.0 * re_term
            - x33 * x12.norm_sq() - x22 * x13.norm_sq() - x11 * x23.norm_sq();
    return inv;
}

double det2(const HermOct2& w) {
    return w.diag[0] * w.diag[1] - w.upper[0].norm_sq();
}

template <int N>
HermMatrix<N> conj_transpose_product(const OctMatrix& x) {
    if (x.cols() != N)
        throw std::invalid_argument("conj_transpose_product: column count mismatch");
    HermMatrix<N> w;
    for (int i = 0; i < N; ++i) {
        double d = 0.0;
        for (int k = 0; k < x.rows(); ++k) d += x(k, i).norm_sq();
        w.diag[static_cast<std::size_t>(i)] = d;
    }
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            Octonion acc;
            for (int k = 0; k < x.rows(); ++k) acc += x(k, i).conj() * x(k, j);
            w.upper[static_cast<std::size_t>(HermMatrix<N>::upper_index(i, j))] = acc;
        }
    }
    return w;
}

template HermMatrix<2> conj_transpose_product<2>(const OctMatrix&);
template HermMatrix<3> conj_transpose_product<3>(const OctMatrix&);

} // namespace octrmt
