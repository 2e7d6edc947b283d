#pragma once

#include <span>
#include <vector>

#include "turan/graph.hpp"
#include "turan/poly.hpp"

namespace turan {

/// Spectral radius estimate with convergence metadata. The Perron vector is
/// present (non-empty) iff the input graph was connected.
struct SpectralResult {
    double rho = 0.0;
    std::vector<double> perron;  // unit 2-norm, strictly positive entries
    long long iterations = 0;
    double residual = 0.0;
};

/// Largest adjacency eigenvalue; maximum over components if disconnected.
/// Power iteration on A+I from the all-ones vector; converged when successive
/// Rayleigh quotients differ by < 1e-13 and the residual ||Ax - rho x||_inf
/// is < 1e-10. Throws std::runtime_error after 1e6 iterations without
/// convergence.
SpectralResult spectral_radius(const Graph& g);

/// x^T A x = sum over edges of 2 x_u x_v.
double quadratic_form(const Graph& g, std::span<const double> x);

/// Ordered vertex partition into disjoint, covering, nonempty blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;
    void validate(const Graph& g) const;  // throws on malformed partitions
};

bool is_equitable(const Graph& g, const Partition& p);

/// Quotient matrix of an equitable partition: b[i][j] = |V_j ∩ N(u)| for any
/// u in V_i.
struct QuotientMatrix {
    int k = 0;
    std::vector<long long> b;  // row-major k*k
    long long at(int i, int j) const { return b[static_cast<std::size_t>(i) * k + j]; }
};

/// Throws std::invalid_argument when the partition is not equitable.
QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

/// Exact integer characteristic polynomial det(xI - B) via the
/// Faddeev-LeVerrier recurrence with exact division; requires k <= 16.
/// Throws std::overflow_error if coefficients exceed 128-bit range.
IntPolynomial char_poly(const QuotientMatrix& b);

/// rho(G) <= sqrt(rho^2(G-v) + 2 d(v) - 1), checked within 1e-9.
bool vertex_deletion_bound_holds(const Graph& g, int v);

}  // namespace turan
