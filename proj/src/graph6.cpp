#include "rothlab/graph6.hpp"

namespace rothlab {

namespace {

constexpr int kOffset = 63;

int sextet(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) throw GraphError("graph6: byte outside [63,126]");
  return v - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw GraphError("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw GraphError("graph6: unsupported header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
    if (n < 63) throw GraphError("graph6: long header for small order");
    pos = 4;
  }
  if (n > kGraph6MaxOrder) throw GraphError("graph6: order exceeds limit");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw GraphError("graph6: body length mismatch");

  Graph g(n);
  std::size_t k = 0;
  std::size_t i = 0, j = 1;  // column-major upper triangle
  for (std::size_t b = 0; b < bytes; ++b) {
    const int value = sextet(text[pos + b]);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool bit = (value >> shift) & 1;
      if (k >= bits) {
        if (bit) throw GraphError("graph6: nonzero padding bits");
        continue;
      }
      if (bit) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph6: order exceeds limit");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace rothlab
