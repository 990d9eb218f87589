#pragma once

#include <string>
#include <string_view>

#include "rothlab/graph.hpp"

namespace rothlab {

/// Largest order accepted by the graph6 codec.
inline constexpr std::size_t kGraph6MaxOrder = 258;

/// Decodes one graph6 line (trailing newline/whitespace tolerated).
/// Throws GraphError on a malformed header, a byte outside [63,126], a
/// length mismatch, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

std::string emit_graph6(const Graph& g);

}  // namespace rothlab
