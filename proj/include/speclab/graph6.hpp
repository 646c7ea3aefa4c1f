#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

// graph6 codec (McKay's ASCII format). Bits cover the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed 6 per byte, MSB first,
// each byte offset by 63.

inline std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  // tolerate the optional format header and surrounding whitespace
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (s.empty()) throw MalformedInput("graph6: empty input");

  for (char c : s)
    if (c < 63 || c > 126)
      throw MalformedInput("graph6: byte out of printable range");

  size_t pos = 0;
  long long n;
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~')
      throw MalformedInput("graph6: order exceeds supported range");
    if (s.size() < 4) throw MalformedInput("graph6: truncated order field");
    n = (static_cast<long long>(s[1] - 63) << 12) |
        (static_cast<long long>(s[2] - 63) << 6) | static_cast<long long>(s[3] - 63);
    pos = 4;
  }
  if (n > kMaxOrder)
    throw MalformedInput("graph6: order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxOrder));
  long long nbits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() - pos < need) throw MalformedInput("graph6: truncated bit vector");
  if (s.size() - pos > need) throw MalformedInput("graph6: trailing bytes after bit vector");

  std::vector<Edge> es;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[pos + static_cast<size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  return Graph(static_cast<int>(n), es);
}

}  // namespace speclab
