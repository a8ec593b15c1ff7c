#pragma once

#include <array>
#include <vector>

#include "octrmt/octonion.hpp"

namespace octrmt {

/// Hermitian NxN matrix with octonion entries, N in {2,3}. Only the real
/// diagonal and the strict upper triangle are stored; entry (j,i) is
/// conj(entry(i,j)) by construction, so Hermiticity cannot drift.
template <int N>
struct HermMatrix {
    static_assert(N == 2 || N == 3, "only 2x2 and 3x3 Hermitian octonion matrices are supported");

    std::array<double, N> diag{};
    std::array<Octonion, N*(N - 1) / 2> upper{};

    static constexpr int upper_index(int i, int j) {
        // (0,1) -> 0, (0,2) -> 1, (1,2) -> 2
        return i * (2 * N - 3 - i) / 2 + j - 1;
    }

    Octonion entry(int i, int j) const {
        if (i == j) return Octonion(diag[static_cast<std::size_t>(i)]);
        if (i < j) return upper[static_cast<std::size_t>(upper_index(i, j))];
        return upper[static_cast<std::size_t>(upper_index(j, i))].conj();
    }

    static HermMatrix identity() {
        HermMatrix h;
        for (int i = 0; i < N; ++i) h.diag[static_cast<std::size_t>(i)] = 1.0;
        return h;
    }

    HermMatrix& operator+=(const HermMatrix& o) {
        for (int i = 0; i < N; ++i) diag[static_cast<std::size_t>(i)] += o.diag[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < upper.size(); ++k) upper[k] += o.upper[k];
        return *this;
    }
    HermMatrix& operator-=(const HermMatrix& o) {
        for (int i = 0; i < N; ++i) diag[static_cast<std::size_t>(i)] -= o.diag[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < upper.size(); ++k) upper[k] -= o.upper[k];
        return *this;
    }
    HermMatrix& operator*=(double s) {
        for (double& d : diag) d *= s;
        for (Octonion& u : upper) u *= s;
        return *this;
    }
    friend HermMatrix operator+(HermMatrix a, const HermMatrix& b) { return a += b; }
    friend HermMatrix operator-(HermMatrix a, const HermMatrix& b) { return a -= b; }
    friend HermMatrix operator*(double s, HermMatrix a) { return a *= s; }
    friend HermMatrix operator*(HermMatrix a, double s) { return a *= s; }
};

using HermOct2 = HermMatrix<2>;
using HermOct3 = HermMatrix<3>;

/// Dense rectangular matrix of octonions.
class OctMatrix {
public:
    OctMatrix() = default;
    OctMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Octonion& operator()(int r, int c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Octonion& operator()(int r, int c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

    static OctMatrix identity(int n);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Octonion> e_;
};

/// Entrywise matrix product; every summand is one binary octonion product,
/// so no associativity ambiguity arises within a term. Throws
/// std::invalid_argument on shape mismatch.
OctMatrix oct_mat_mul(const OctMatrix& a, const OctMatrix& b);

OctMatrix conj_transpose(const OctMatrix& a);

/// Dense real symmetric matrix; entries (i,j) and (j,i) are written
/// together and are bitwise equal.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int dim) : dim_(dim),
        m_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

    int dim() const { return dim_; }
    double at(int r, int c) const { return m_[static_cast<std::size_t>(r * dim_ + c)]; }
    void set_sym(int r, int c, double v) {
        m_[static_cast<std::size_t>(r * dim_ + c)] = v;
        m_[static_cast<std::size_t>(c * dim_ + r)] = v;
    }
    double& raw(int r, int c) { return m_[static_cast<std::size_t>(r * dim_ + c)]; }

private:
    int dim_ = 0;
    std::vector<double> m_;
};

/// 8N x 8N real symmetric embedding: diagonal blocks x_jj * I8, block (i,j)
/// for i<j the left-multiplication matrix of x_ij, block (j,i) its transpose.
template <int N>
SymMatrix real_embedding(const HermMatrix<N>& h);

/// Jordan product (AB + BA)/2, computed through oct_mat_mul on the full
/// matrices. The result is Hermitian analytically; the structural form keeps
/// the diagonal real parts and the upper triangle.
template <int N>
HermMatrix<N> jordan_product(const HermMatrix<N>& a, const HermMatrix<N>& b);

struct Invariants3 {
    double trace;
    double sigma;
    double det;
};

/// Trace, second elementary symmetric invariant, and determinant of a 3x3
/// Hermitian octonion matrix. The determinant's octonion term is evaluated
/// innermost-first: x12*x23, then conj(x13)*(...), then the real part.
Invariants3 invariants3(const HermOct3& h);

/// det of a 2x2 Hermitian octonion matrix: a*c - |b|^2.
double det2(const HermOct2& w);

/// Tr(H∘H) in closed form: sum of squared diagonal entries plus twice the
/// squared norms of the upper entries. Equals the sum of squared eigenvalues.
template <int N>
double trace_square(const HermMatrix<N>& h) {
    double s = 0.0;
    for (double d : h.diag) s += d * d;
    for (const Octonion& u : h.upper) s += 2.0 * u.norm_sq();
    return s;
}

/// W = X^dag X for an n x N octonion matrix. Diagonal entries are computed
/// as sums of squared norms, hence exactly real and non-negative.
template <int N>
HermMatrix<N> conj_transpose_product(const OctMatrix& x);

/// Full NxN octonion matrix view of a Hermitian matrix.
template <int N>
OctMatrix to_full(const HermMatrix<N>& h);

/// Reads the structural Hermitian content out of an analytically Hermitian
/// product. Throws numeric_error if a diagonal imaginary component or the
/// (j,i)-vs-conj(i,j) mismatch exceeds tol * max(1, largest |entry|).
template <int N>
HermMatrix<N> hermitian_part(const OctMatrix& m, double tol = 1e-12);

} // namespace octrmt
