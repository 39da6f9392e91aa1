#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "copclean/graph.hpp"

namespace copclean {

/// Largest order accepted by the graph6 codec.
inline constexpr int kGraph6MaxOrder = 1 << 18;

/// Decodes one graph6 record (no trailing newline). The optional
/// ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding: shortest size prefix, upper-triangle bits in
/// column order, 6 bits per byte offset by 63, zero padding.
std::string emit_graph6(const Graph& g);

/// "u v" per line with 0-based ids; '#' starts a comment. A "# n=<count>"
/// comment fixes the order so trailing isolated vertices survive.
Graph parse_edge_list(std::istream& in, std::string name = {});
std::string emit_edge_list(const Graph& g);

}  // namespace copclean
