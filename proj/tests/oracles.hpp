#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they check: brute-force permutation canonicalization, labeled-graph
// enumeration, and a dense eigensolver.

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan::oracle {

/// Isomorphism-class key by exhaustive minimization over all n! vertex
/// permutations (graph6 bit order). Practical for n <= 8.
std::pair<int, std::uint64_t> perm_canonical_key(const Graph& g);

bool isomorphic_bruteforce(const Graph& a, const Graph& b);

/// All isomorphism classes of connected graphs with exactly m edges and no
/// isolated vertices, enumerated from labeled graphs and deduplicated with
/// perm_canonical_key. Practical for m <= 6.
std::vector<Graph> connected_classes_bruteforce(int m);

/// Largest adjacency eigenvalue via a dense symmetric eigensolver.
double rho_dense(const Graph& g);

/// Erdős–Rényi graph on n vertices.
Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Random connected graph: random tree plus extra random edges.
Graph random_connected(std::mt19937_64& rng, int n, int extra_edges);

/// Mixed corpus of named small graphs, family instances and random graphs;
/// used by the spectral property tests.
std::vector<Graph> test_corpus(std::uint64_t seed, int random_count);

}  // namespace turan::oracle
