#pragma once

#include <compare>
#include <string>

#include "turan/graph.hpp"

namespace turan {

/// Label-invariant encoding of an isomorphism class. Two graphs have equal
/// codes iff they are isomorphic. The byte content is the graph6 string of a
/// canonically relabeled copy, so codes are printable and decodable.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

/// Canonical form by equitable partition refinement and individualization,
/// minimizing the graph6 bit string over the refinement tree. Requires n <= 64.
CanonicalCode canonical_form(const Graph& g);

/// Exact isomorphism test; works above the canonical_form size cap.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace turan
