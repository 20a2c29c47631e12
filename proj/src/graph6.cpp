#include "randic/graph6.hpp"

namespace randic {

namespace {

constexpr int kBias = 63;
constexpr char kMaxPrintable = 126;

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

int sextet(char c, std::size_t pos) {
  if (c < kBias || c > kMaxPrintable) {
    throw FormatError("byte " + std::to_string(static_cast<unsigned char>(c)) + " at offset " +
                      std::to_string(pos) + " outside the printable range 63..126");
  }
  return c - kBias;
}

// Reads the size field; returns (n, bytes consumed).
std::pair<int, std::size_t> read_order(std::string_view body, std::size_t offset) {
  if (body.empty()) throw FormatError("missing size byte");
  if (body[0] == kMaxPrintable) {
    throw FormatError("long-form size field (n > 62) is not supported");
  }
  return {sextet(body[0], offset), 1};
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_right(line);
  auto [n, used] = read_order(line, 0);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = used + (pairs + 5) / 6;
  if (line.size() != expected) {
    throw FormatError("graph6 line for n = " + std::to_string(n) + " must have " +
                      std::to_string(expected) + " bytes, got " + std::to_string(line.size()));
  }
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t pos = used + bit / 6;
      const int value = sextet(line[pos], pos);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const std::size_t pos = line.size() - 1;
    const int pad_bits = static_cast<int>(6 - pairs % 6);
    if (sextet(line[pos], pos) & ((1 << pad_bits) - 1)) {
      throw FormatError("nonzero padding bits in final graph6 byte");
    }
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxShortFormOrder) {
    throw FormatError("graph6 short form holds at most 62 vertices, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_sparse6(std::string_view line) {
  line = trim_right(line);
  if (line.empty() || line[0] != ':') throw FormatError("sparse6 line must start with ':'");
  std::string_view body = line.substr(1);
  auto [n, used] = read_order(body, 1);
  int k = 0;
  while ((1 << k) < n) ++k;

  Graph g(n);
  const std::size_t total_bits = (body.size() - used) * 6;
  std::size_t bit = 0;
  auto next_bit = [&] {
    const std::size_t pos = used + bit / 6;
    const int value = sextet(body[pos], pos + 1);
    const int b = (value >> (5 - bit % 6)) & 1;
    ++bit;
    return b;
  };

  int v = 0;
  while (total_bits - bit >= static_cast<std::size_t>(k) + 1) {
    const int b = next_bit();
    int x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | next_bit();
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw FormatError("sparse6 loop at vertex " + std::to_string(v) + " is not supported");
      g.add_edge(x, v);
    }
  }
  // Validate any bytes the decoder did not reach.
  for (std::size_t pos = used; pos < body.size(); ++pos) sextet(body[pos], pos + 1);
  return g;
}

std::string_view strip_format_header(std::string_view line) {
  for (std::string_view header : {std::string_view(">>graph6<<"), std::string_view(">>sparse6<<")}) {
    if (line.substr(0, header.size()) == header) return line.substr(header.size());
  }
  return line;
}

Graph parse_graph_line(std::string_view line) {
  line = trim_right(strip_format_header(line));
  if (line.empty()) throw FormatError("empty line");
  if (line[0] == ':') return parse_sparse6(line);
  if (line[0] == ';') throw FormatError("incremental sparse6 is not supported");
  return parse_graph6(line);
}

}  // namespace randic
