#pragma once

#include <string>

#include "turan/graph.hpp"

#include "json.hpp"

namespace turan {

/// Structured outcome of one quantitative claim check. For strict
/// inequalities, `holds` requires margin > 1e-9; margins inside (0, 1e-9]
/// yield status "indeterminate" rather than a pass. Checks whose
/// preconditions fail report status "inapplicable". Verdicts at parameters
/// below a result's stated threshold are flagged exploratory in `details`.
struct Verdict {
    std::string claim_id;
    nlohmann::json params;
    bool holds = false;
    double margin = 0.0;
    nlohmann::json details;
    std::string status;  // "holds" | "fails" | "indeterminate" | "inapplicable"

    nlohmann::json to_json() const;
    std::string csv_row() const;  // claim_id,params,holds,margin
    static std::string csv_header();
};

/// rho(G) <= sqrt(2m(1 - 1/r)) for K_{r+1}-free G.
Verdict check_nikiforov_bound(const Graph& g, int r);

/// rho(G) <= (1+sqrt(4m-3))/2 for θ_{1,2,3}-free G with m >= 8 and no
/// isolated vertices; equality flagged iff G is the split star S_{(m+3)/2,2}.
Verdict check_theorem_1_4(const Graph& g);

/// The three strict orderings rho(D_{m-2,1}) < rho(S_m^1),
/// rho(S_{m-1}^2) < rho(S_m^1), rho(H) < rho(S_m^1), each established by two
/// routes (polynomial roots and power iteration on the constructed graph),
/// plus rho(S_m^1) > sqrt(m-1). Routes must agree on every ordering.
Verdict check_sec3_orderings(long long m);

/// (i) rho(F_{m,t}) < rho(F_{m,1}) for odd t >= 3 (or < rho(F_{m,2}) for even
/// t >= 4), all valid t <= t_max; (ii) rho(F_{m,t}) > (1+sqrt(4m-7))/2 for
/// the parity-valid t in {1,2}. Both routes per comparison.
Verdict check_lemma_4_3(long long m, int t_max);

/// Classifies every component of G[N(v)] as isolated vertex / triangle /
/// star; holds iff nothing else occurs.
Verdict check_neighborhood_structure(const Graph& g, int v);

/// rho(G) <= sqrt(m) for K_{2,r+1}-free G; equality flagged iff G is a star.
/// The m >= 16r^2 hypothesis is recorded, not enforced.
Verdict check_star_bound_k2r1(const Graph& g, int r);

/// Vertex-deletion bound rho(G) <= sqrt(rho^2(G-v) + 2 d(v) - 1), with
/// equality detection (complete graphs; stars at a leaf).
Verdict check_lemma_2_5(const Graph& g, int v);

}  // namespace turan
