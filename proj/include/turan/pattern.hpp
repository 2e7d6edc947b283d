#pragma once

#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

/// Identifies a forbidden pattern: K_{2,r+1}, θ_{1,2,3}, a generic graph, or
/// no pattern at all (unrestricted enumeration).
struct PatternId {
    enum class Kind { None, K2R1, Theta123, Generic };
    Kind kind = Kind::None;
    int r = 0;      // K2R1 parameter
    Graph generic;  // Generic pattern graph

    static PatternId none() { return {}; }
    static PatternId k2r1(int r);
    static PatternId theta123() { return {Kind::Theta123, 0, {}}; }
    static PatternId generic_graph(Graph f) { return {Kind::Generic, 0, std::move(f)}; }

    /// "none", "k2r1:<r>", "theta123", or "g6:<string>".
    std::string to_string() const;
    static PatternId parse(std::string_view s);
};

/// True iff some vertex pair has at least r+1 common neighbors, i.e. G
/// contains K_{2,r+1} as a (not necessarily induced) subgraph.
bool contains_k2r1(const Graph& g, int r);

/// True iff two adjacent vertices are joined by internally disjoint paths of
/// lengths 1, 2 and 3, i.e. G contains θ_{1,2,3} as a subgraph.
bool contains_theta123(const Graph& g);

/// Generic subgraph containment oracle: an injective map V(F) -> V(G)
/// preserving all edges of F. Backtracking with degree pruning; intended as a
/// correctness backstop, not a hot path.
bool contains_subgraph(const Graph& g, const Graph& f);

bool contains_pattern(const Graph& g, const PatternId& p);

/// For a graph G already free of `pattern`, decides whether G + new_edge is
/// still pattern-free, testing only occurrences through the new edge.
/// Throws if the edge is already present.
bool incremental_free_check(const Graph& g, Edge new_edge, const PatternId& pattern);

}  // namespace turan
