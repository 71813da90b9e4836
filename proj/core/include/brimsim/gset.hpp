#pragma once

#include <iosfwd>
#include <string>

#include "brimsim/graph.hpp"

namespace brimsim {

/// Reads the plain-text instance format used by the Stanford Gset suite:
/// a header line "n m" followed by m lines "i j w" with 1-based vertex
/// indices. Weights may be integer or decimal. Duplicate pairs merge by
/// summation. Throws ParseError (with line number) on malformed lines,
/// out-of-range indices, or an edge count that disagrees with the header.
Graph parse_gset(std::istream& in);

Graph parse_gset(const std::string& text);

/// Loads a Gset-format file from disk. Throws ParseError if unreadable.
Graph load_gset_file(const std::string& path);

/// Emits the same format, 1-based indices, edges in canonical order.
/// Integer weights print without a decimal point, so parse/serialize is
/// the identity on canonical graphs.
void serialize_gset(const Graph& g, std::ostream& out);

std::string serialize_gset(const Graph& g);

} // namespace brimsim
