#pragma once

#include <optional>
#include <span>
#include <string>

#include "turan/graph.hpp"
#include "turan/spectral.hpp"

#include "json.hpp"

namespace turan {

// Constructors for the named graph families. Vertex order is fixed and
// documented per constructor so that the matching equitable partitions can be
// emitted alongside.

/// K_{1,m}: center 0, leaves 1..m. n = m+1, size m.
Graph star(int m);

/// S_n^k: center 0 adjacent to all of 1..n-1, plus the k disjoint leaf edges
/// (1,2),(3,4),...,(2k-1,2k). Requires n >= 2k+1. Size n-1+k.
Graph star_matching(int n, int k);

/// S_{n,k} = K_k ∇ K̄_{n-k}: clique 0..k-1, independent k..n-1.
/// Size C(k,2) + k(n-k).
Graph split_star(int n, int k);

/// F_{m,t}: v=0, u=1, R = 2..1+(m-t-1)/2, T after R. Edges uv, v-R, u-R, v-T.
/// Requires m > t+1 and m-t odd. Size m.
Graph family_f(int m, int t);

/// θ_{p,q,r}: endpoints 0,1 joined by internally disjoint paths of lengths
/// p <= q <= r (q >= 2); internal vertices follow in path order.
Graph theta(int p, int q, int r);

/// K_{a,b}: part A = 0..a-1, part B = a..a+b-1.
Graph complete_bipartite(int a, int b);

/// D_{i,j}: centers 0 (i leaves) and 1 (j leaves), centers adjacent; leaves of
/// 0 first. Size i+j+1.
Graph double_star(int i, int j);

/// H: u*=0 adjacent to u1=1, u2=2, u3=3 and all of S1 = 4..m-2 (|S1| = m-5);
/// edges u1u2 and u2u3. Requires m >= 6. Size m.
Graph h_figure1(int m);

/// H_{t,s} ∘ K_{1,r}: v=0 joined to every vertex of the star K_{1,r}
/// (center u=1, leaves 2..r+1) and to the independent set T; arbitrary
/// bipartite edges between T and S given as (T-index, S-index) pairs.
/// T occupies r+2..r+1+t and S the s vertices after it.
/// Size 2r+1+t+|bip_edges|.
Graph hts_k1r(int t, int s, int r, std::span<const Edge> bip_edges);

// Equitable partitions matching the quotient matrices used in the source
// results (block orders as displayed there).
Partition family_f_partition(int m, int t);        // (T, {v}, {u}, R)
Partition h_figure1_partition(int m);              // ({u*},{u1},{u2},{u3},S1)
Partition star_matching_partition(int n, int k);   // ({center}, matched, unmatched)
Partition split_star_partition(int n, int k);      // (clique, independent)
Partition double_star_partition(int i, int j);     // ({c_i},{c_j},leaves_i,leaves_j)

/// One named family instance; JSON form {"family": "...", "params": {...}}.
struct FamilySpec {
    enum class Family { Star, StarMatching, SplitStar, F, Theta, CompleteBipartite, DoubleStar, HFigure1, HtsK1r };
    Family family;
    nlohmann::json params;

    Graph build() const;
    /// The family's canonical equitable partition, when one is defined.
    std::optional<Partition> partition() const;

    nlohmann::json to_json() const;
    static FamilySpec from_json(const nlohmann::json& j);
    static std::string family_name(Family f);
};

}  // namespace turan
