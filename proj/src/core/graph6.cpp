#include "cei/graph6.hpp"

#include <cstdint>

#include "cei/errors.hpp"

namespace cei {

namespace {

constexpr std::size_t kShortMax = 62;
constexpr std::size_t kMediumMax = 258047;
constexpr std::uint64_t kLongMax = (std::uint64_t{1} << 36) - 1;
constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::size_t n) {
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMediumMax) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    if (n > kLongMax) throw InvalidArgument("graph too large for graph6");
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6 byte " + std::to_string(static_cast<int>(c)) + " at offset " +
                     std::to_string(pos) + " outside 63..126");
  }
  return c - 63;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("graph6 encoding needs n >= 1");
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (sextet(text, 0) < 63) {
    n = static_cast<std::size_t>(sextet(text, 0));
    pos = 1;
  } else if (text.size() >= 2 && sextet(text, 1) == 63) {
    if (text.size() < 8) throw ParseError("truncated 8-byte graph6 order header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, i));
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("truncated 4-byte graph6 order header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, i));
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6 order 0 is not supported");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                     " bytes, expected " + std::to_string(bytes) + " for order " +
                     std::to_string(n));
  }

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      int byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) b.connect(u, v);
    }
  }
  if (bits % 6 != 0) {
    int last = sextet(text, text.size() - 1);
    int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6 padding bits are not zero");
  }
  return std::move(b).build();
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    out.push_back({number, line});
  }
  return out;
}

}  // namespace cei
