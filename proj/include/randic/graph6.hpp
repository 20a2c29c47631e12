#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "randic/graph.hpp"

namespace randic {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest order representable in the short (single-byte) size field.
inline constexpr int kMaxShortFormOrder = 62;

/// Decodes one graph6 line (short form only). Trailing whitespace is ignored.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 text for g without a trailing newline. The encoding is
/// labeling-sensitive: isomorphic graphs may produce different strings.
std::string serialize_graph6(const Graph& g);

/// Decodes one sparse6 line (leading ':'). Repeated edges collapse; loops are
/// rejected since Graph is simple.
Graph parse_sparse6(std::string_view line);

/// Strips a leading ">>graph6<<" or ">>sparse6<<" header, if any.
std::string_view strip_format_header(std::string_view line);

/// Dispatches on the leading character after header stripping.
Graph parse_graph_line(std::string_view line);

}  // namespace randic
