#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

namespace octrmt {

/// A real octonion over the unit basis {1, e1, ..., e7} with
/// e1=i, e2=j, e3=k, e4=l, e5=il, e6=jl, e7=kl.
///
/// The algebra is non-commutative and non-associative but alternative,
/// and the norm is multiplicative: |ab| = |a||b|. All operations are
/// pure; values are safe to share across threads.
struct Octonion {
    std::array<double, 8> c{};

    constexpr Octonion() = default;
    constexpr explicit Octonion(double re) : c{re, 0, 0, 0, 0, 0, 0, 0} {}
    constexpr Octonion(double c0, double c1, double c2, double c3,
                       double c4, double c5, double c6, double c7)
        : c{c0, c1, c2, c3, c4, c5, c6, c7} {}

    /// Basis element e_k; unit(0) is the multiplicative identity.
    static constexpr Octonion unit(int k) {
        Octonion o;
        o.c[static_cast<std::size_t>(k)] = 1.0;
        return o;
    }
    static constexpr Octonion zero() { return Octonion{}; }
    static constexpr Octonion one() { return unit(0); }

    constexpr double real() const { return c[0]; }

    constexpr Octonion conj() const {
        return {c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], -c[7]};
    }

    constexpr double norm_sq() const {
        double s = 0.0;
        for (double v : c) s += v * v;
        return s;
    }

    double norm() const { return std::sqrt(norm_sq()); }

    /// Multiplicative inverse conj(a)/|a|^2. Throws std::domain_error on zero.
    Octonion inverse() const;

    constexpr Octonion& operator+=(const Octonion& o) {
        for (int k = 0; k < 8; ++k) c[static_cast<std::size_t>(k)] += o.c[static_cast<std::size_t>(k)];
        return *this;
    }
    constexpr Octonion& operator-=(const Octonion& o) {
        for (int k = 0; k < 8; ++k) c[static_cast<std::size_t>(k)] -= o.c[static_cast<std::size_t>(k)];
        return *this;
    }
    constexpr Octonion& operator*=(double s) {
        for (double& v : c) v *= s;
        return *this;
    }
    constexpr Octonion& operator/=(double s) {
        for (double& v : c) v /= s;
        return *this;
    }

    friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
    friend constexpr Octonion operator-(const Octonion& a) {
        return {-a.c[0], -a.c[1], -a.c[2], -a.c[3], -a.c[4], -a.c[5], -a.c[6], -a.c[7]};
    }
    friend constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
    friend constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
    friend constexpr Octonion operator/(Octonion a, double s) { return a /= s; }
    friend constexpr bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }

    /// Octonion product via the precomputed basis structure table (hot path).
    friend Octonion operator*(const Octonion& a, const Octonion& b);
};

/// Octonion product evaluated through the quaternion-pair construction
/// a = p1 + p2 l, b = q1 + q2 l:
///   ab = (p1 q1 - conj(q2) p2) + (q2 p1 + p2 conj(q1)) l.
/// Independent of the table-based operator*; used as its cross-check.
Octonion mul_cayley_dickson(const Octonion& a, const Octonion& b);

/// 8x8 real left-multiplication matrix: vec(a*x) = omega(a) * vec(x).
/// Column 0 is the coefficient vector of a; columns satisfy
/// omega(a)^T omega(a) = |a|^2 I.
struct LeftMultMatrix {
    std::array<double, 64> m{};

    double& at(int r, int col) { return m[static_cast<std::size_t>(r * 8 + col)]; }
    double at(int r, int col) const { return m[static_cast<std::size_t>(r * 8 + col)]; }

    /// Row-major matrix-vector product against a coefficient vector.
    std::array<double, 8> apply(const std::array<double, 8>& x) const;
};

LeftMultMatrix left_mult_matrix(const Octonion& a);

std::ostream& operator<<(std::ostream& os, const Octonion& o);

namespace testhooks {
/// Flips the sign of one basis-product table entry (e5*e6). Breaks norm
/// multiplicativity on purpose; negative control for the verification suite.
void corrupt_multiplication_table(bool enable);
} // namespace testhooks

} // namespace octrmt
