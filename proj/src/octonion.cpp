#include "octrmt/octonion.hpp"

#include <ostream>
#include <stdexcept>

namespace octrmt {

namespace {

// Basis structure table: e_i * e_j = kSign[i][j] * e_{kIndex[i][j]}.
// Index 0 is the real unit 1. Derived from the quaternion-pair product
// rule; the unit test checks every entry against mul_cayley_dickson.
constexpr int kIndex[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};

constexpr double kSignInit[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

double g_sign[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

struct Quat {
    double w, x, y, z;
};

Quat qmul(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat qconj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

} // namespace

// Accumulation is j-major so that, for every output component, contributions
// arrive in the same order the left-multiplication matrix-vector product
// visits them. The two code paths then produce bit-identical results.
Octonion operator*(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int j = 0; j < 8; ++j) {
        const double bj = b.c[static_cast<std::size_t>(j)];
        for (int i = 0; i < 8; ++i) {
            r.c[static_cast<std::size_t>(kIndex[i][j])] +=
                g_sign[i][j] * a.c[static_cast<std::size_t>(i)] * bj;
        }
    }
    return r;
}

Octonion mul_cayley_dickson(const Octonion& a, const Octonion& b) {
    const Quat p1{a.c[0], a.c[1], a.c[2], a.c[3]};
    const Quat p2{a.c[4], a.c[5], a.c[6], a.c[7]};
    const Quat q1{b.c[0], b.c[1], b.c[2], b.c[3]};
    const Quat q2{b.c[4], b.c[5], b.c[6], b.c[7]};

    const Quat u = qmul(p1, q1);
    const Quat v = qmul(qconj(q2), p2);
    const Quat s = qmul(q2, p1);
    const Quat t = qmul(p2, qconj(q1));

    return {u.w - v.w, u.x - v.x, u.y - v.y, u.z - v.z,
            s.w + t.w, s.x + t.x, s.y + t.y, s.z + t.z};
}

Octonion Octonion::inverse() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw std::domain_error("octonion inverse of zero");
    return conj() / n2;
}

LeftMultMatrix left_mult_matrix(const Octonion& a) {
    LeftMultMatrix w;
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i) {
            w.at(kIndex[i][j], j) = g_sign[i][j] * a.c[static_cast<std::size_t>(i)];
        }
    }
    return w;
}

std::array<double, 8> LeftMultMatrix::apply(const std::array<double, 8>& x) const {
    std::array<double, 8> y{};
    for (int r = 0; r < 8; ++r) {
        double acc = 0.0;
        for (int col = 0; col < 8; ++col) acc += at(r, col) * x[static_cast<std::size_t>(col)];
        y[static_cast<std::size_t>(r)] = acc;
    }
    return y;
}

std::ostream& operator<<(std::ostream& os, const Octonion& o) {
    os << '(' << o.c[0];
    for (int k = 1; k < 8; ++k) os << ", " << o.c[static_cast<std::size_t>(k)];
    return os << ')';
}

namespace testhooks {

void corrupt_multiplication_table(bool enable) {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g_sign[i][j] = kSignInit[i][j];
    if (enable) g_sign[5][6] = -kSignInit[5][6];
}

} // namespace testhooks

} // namespace octrmt
