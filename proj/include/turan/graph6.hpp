#pragma once

#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

/// Encodes a graph in the standard graph6 ASCII format (upper triangle,
/// column-major bit order, 6 bits per printable character offset by 63).
std::string to_graph6(const Graph& g);

/// Decodes a graph6 string. Throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view s);

}  // namespace turan
