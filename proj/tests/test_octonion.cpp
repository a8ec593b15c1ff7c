#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "octrmt/octonion.hpp"
#include "octrmt/rng.hpp"
#include "octrmt/samplers.hpp"

using octrmt::Octonion;

namespace {

double rel_err(double lhs, double rhs) {
    return std::fabs(lhs - rhs) / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

double max_abs_diff(const Octonion& a, const Octonion& b) {
    double m = 0.0;
    for (int k = 0; k < 8; ++k)
        m = std::max(m, std::fabs(a.c[static_cast<std::size_t>(k)] - b.c[static_cast<std::size_t>(k)]));
    return m;
}

Octonion random_oct(octrmt::RngStream& g) { return octrmt::sample_gaussian_octonion(g, 1.0); }

// The expected left-multiplication matrix in symbolic form: entry (r,c) of
// omega(a) is kOmegaSign[r][c] * a_{kOmegaIdx[r][c]}. This is an oracle
// independent of the structure table in the implementation.
constexpr int kOmegaIdx[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};
constexpr int kOmegaSign[8][8] = {
    {+1, -1, -1, -1, -1, -1, -1, -1},
    {+1, +1, -1, +1, -1, +1, +1, -1},
    {+1, +1, +1, -1, -1, -1, +1, +1},
    {+1, -1, +1, +1, -1, +1, -1, +1},
    {+1, +1, +1, +1, +1, -1, -1, -1},
    {+1, -1, +1, -1, +1, +1, +1, -1},
    {+1, -1, -1, +1, +1, -1, +1, +1},
    {+1, +1, -1, -1, +1, +1, -1, +1},
};

} // namespace

TEST_CASE("basis multiplication table agrees with the quaternion-pair expansion") {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const Octonion table = Octonion::unit(i) * Octonion::unit(j);
            const Octonion pair = octrmt::mul_cayley_dickson(Octonion::unit(i), Octonion::unit(j));
            CHECK(table == pair);
        }
    }
}

TEST_CASE("unit element and signature products") {
    octrmt::RngStream g(123, 0);
    for (int t = 0; t < 10; ++t) {
        const Octonion x = random_oct(g);
        CHECK(Octonion::one() * x == x);
        CHECK(x * Octonion::one() == x);
    }
    CHECK(Octonion::unit(5) * Octonion::unit(6) == -1.0 * Octonion::unit(3));
    CHECK(Octonion::unit(6) * Octonion::unit(7) == -1.0 * Octonion::unit(1));
}

TEST_CASE("the (e5,e6,e7) triple flips sign under reassociation") {
    const Octonion l = Octonion::unit(5) * (Octonion::unit(6) * Octonion::unit(7));
    const Octonion r = (Octonion::unit(5) * Octonion::unit(6)) * Octonion::unit(7);
    CHECK(l == -1.0 * r);
    CHECK(l.norm_sq() == 1.0);
}

TEST_CASE("conjugation") {
    CHECK(Octonion::one().conj() == Octonion::one());
    CHECK(Octonion::unit(3).conj() == -1.0 * Octonion::unit(3));

    octrmt::RngStream g(7, 0);
    for (int t = 0; t < 1000; ++t) {
        const Octonion a = random_oct(g);
        const Octonion b = random_oct(g);
        CHECK(a.conj().conj() == a);
        CHECK(max_abs_diff((a * b).conj(), b.conj() * a.conj()) <=
              1e-12 * std::max(1.0, a.norm() * b.norm()));
    }
}

TEST_CASE("norm") {
    for (int k = 0; k < 8; ++k) CHECK(Octonion::unit(k).norm() == 1.0);
    CHECK(Octonion(1, 1, 1, 1, 1, 1, 1, 1).norm() == std::sqrt(8.0));

    octrmt::RngStream g(11, 0);
    for (int t = 0; t < 10000; ++t) {
        const Octonion a = random_oct(g);
        const Octonion b = random_oct(g);
        CHECK(rel_err((a * b).norm(), a.norm() * b.norm()) <= 1e-12);
    }
}

TEST_CASE("inverse") {
    CHECK(Octonion::one().inverse() == Octonion::one());
    CHECK(Octonion::unit(4).inverse() == -1.0 * Octonion::unit(4));

    const Octonion v(2, 2, 0, 0, 0, 0, 0, 0);
    CHECK(v.inverse() == Octonion(0.25, -0.25, 0, 0, 0, 0, 0, 0));

    CHECK_THROWS_AS((void)Octonion::zero().inverse(), std::domain_error);

    octrmt::RngStream g(13, 0);
    for (int t = 0; t < 1000; ++t) {
        const Octonion a = random_oct(g);
        CHECK(max_abs_diff(a * a.inverse(), Octonion::one()) <= 1e-12);
        CHECK(max_abs_diff(a.inverse() * a, Octonion::one()) <= 1e-12);
    }
}

TEST_CASE("alternativity holds, full associativity does not") {
    octrmt::RngStream g(17, 0);
    for (int t = 0; t < 10000; ++t) {
        const Octonion a = random_oct(g);
        const Octonion b = random_oct(g);
        const double scale = std::max(1.0, a.norm_sq() * b.norm());
        CHECK(max_abs_diff(a * (a * b), (a * a) * b) <= 1e-12 * scale);
        CHECK(max_abs_diff((b * a) * a, b * (a * a)) <= 1e-12 * scale);
    }
}

TEST_CASE("left-multiplication matrix matches the symbolic sign pattern") {
    octrmt::RngStream g(19, 0);
    for (int t = 0; t < 100; ++t) {
        const Octonion a = random_oct(g);
        const octrmt::LeftMultMatrix w = octrmt::left_mult_matrix(a);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                CHECK(w.at(r, c) == kOmegaSign[r][c] * a.c[static_cast<std::size_t>(kOmegaIdx[r][c])]);
    }
}

TEST_CASE("left-multiplication matrix properties") {
    const octrmt::LeftMultMatrix id = octrmt::left_mult_matrix(Octonion::one());
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) CHECK(id.at(r, c) == (r == c ? 1.0 : 0.0));

    octrmt::RngStream g(23, 0);
    for (int t = 0; t < 10000; ++t) {
        const Octonion a = random_oct(g);
        const Octonion x = random_oct(g);
        const octrmt::LeftMultMatrix w = octrmt::left_mult_matrix(a);

        // column 0 is the coefficient vector of a
        for (int r = 0; r < 8; ++r) CHECK(w.at(r, 0) == a.c[static_cast<std::size_t>(r)]);

        const auto y = w.apply(x.c);
        const Octonion ax = a * x;
        for (int r = 0; r < 8; ++r)
            CHECK(rel_err(y[static_cast<std::size_t>(r)], ax.c[static_cast<std::size_t>(r)]) <= 1e-15);
    }
}

TEST_CASE("omega^T omega = |a|^2 I") {
    octrmt::RngStream g(29, 0);
    for (int t = 0; t < 500; ++t) {
        const Octonion a = random_oct(g);
        const octrmt::LeftMultMatrix w = octrmt::left_mult_matrix(a);
        const double n2 = a.norm_sq();
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                double dot = 0.0;
                for (int r = 0; r < 8; ++r) dot += w.at(r, i) * w.at(r, j);
                CHECK(std::fabs(dot - (i == j ? n2 : 0.0)) <= 1e-12 * std::max(1.0, n2));
            }
        }
    }
}

TEST_CASE("table-based and pair-based products agree on random values") {
    octrmt::RngStream g(31, 0);
    for (int t = 0; t < 10000; ++t) {
        const Octonion a = random_oct(g);
        const Octonion b = random_oct(g);
        CHECK(max_abs_diff(a * b, octrmt::mul_cayley_dickson(a, b)) <=
              1e-12 * std::max(1.0, a.norm() * b.norm()));
    }
}
