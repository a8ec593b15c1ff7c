#pragma once

#include <array>
#include <span>
#include <vector>

#include "octrmt/matrices.hpp"

namespace octrmt {

template <int N>
struct Spectrum {
    std::array<double, N> lambda{}; // sorted ascending
};

using Spectrum2 = Spectrum<2>;
using Spectrum3 = Spectrum<3>;

/// Roots of lambda^2 - (a+c) lambda + (ac - |b|^2). The discriminant
/// (a-c)^2 + 4|b|^2 is non-negative, so the roots are always real. The
/// larger-magnitude root is formed first; the other comes from the product
/// of roots, avoiding cancellation.
Spectrum2 eigen2(const HermOct2& h);

/// The three real roots of the characteristic cubic
///   lambda^3 - trace*lambda^2 + sigma*lambda - det = 0,
/// via the trigonometric solution of the depressed cubic plus one Newton
/// polish per root. The Jordan structure guarantees real roots; a
/// discriminant that is negative beyond rounding tolerance throws
/// numeric_error carrying the offending value.
Spectrum3 eigen3_from_invariants(const Invariants3& inv);
Spectrum3 eigen3(const HermOct3& h);

struct ProjectorTriple {
    std::array<HermOct3, 3> p;
};

/// Eigen-projectors P_i = (H∘H - (l_j+l_k) H + l_j l_k I) / ((l_i-l_j)(l_i-l_k)).
/// Requires pairwise-distinct eigenvalues: throws degeneracy_error when the
/// smallest gap is below 1e-6 * max(1, max |lambda|).
ProjectorTriple eigen_projectors(const HermOct3& h, const Spectrum3& s);

/// All eigenvalues of a real symmetric matrix (dim <= 64) by the cyclic
/// Jacobi rotation method, iterated until the off-diagonal Frobenius norm
/// falls below 1e-13 times the matrix Frobenius norm. Sorted ascending.
/// Throws numeric_error after 100 sweeps without convergence.
std::vector<double> sym_eigen(SymMatrix m);

struct Cluster {
    double value;     // cluster mean
    int multiplicity; // members
};

/// Greedy gap-based clustering of sorted eigenvalues: a new cluster starts
/// when the gap to the previous value exceeds tol * max(1, |eig|).
std::vector<Cluster> degeneracy_profile(std::span<const double> sorted_eigs, double tol);

} // namespace octrmt
