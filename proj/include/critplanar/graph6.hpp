#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "critplanar/graph.hpp"

namespace critplanar {

// graph6: size header, then the upper triangle of the adjacency matrix in
// column order (x01, x02, x12, x03, ...) packed six bits per byte, each byte
// offset by 63.

namespace detail {

inline constexpr std::size_t kGraph6SmallLimit = 62;
inline constexpr std::size_t kGraph6MediumLimit = 258047;

inline std::size_t graph6_bit_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline std::size_t graph6_data_length(std::size_t n) { return (graph6_bit_count(n) + 5) / 6; }

inline void append_size(std::string& out, std::size_t n) {
  if (n <= kGraph6SmallLimit) {
    out.push_back(static_cast<char>(63 + n));
    return;
  }
  const int groups = n <= kGraph6MediumLimit ? 3 : 6;
  out.append(groups == 3 ? "~" : "~~");
  for (int shift = 6 * (groups - 1); shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3f)));
}

inline bool graph6_char(char ch) {
  const auto b = static_cast<unsigned char>(ch);
  return b >= 63 && b <= 126;
}

struct Graph6Header {
  std::size_t n = 0;
  std::size_t length = 0;
};

inline Graph6Header read_size(std::string_view text) {
  auto value = [&](std::size_t from, int groups) {
    if (text.size() < from + static_cast<std::size_t>(groups))
      throw Error(ErrorCode::DecodeError, "graph6 size header truncated");
    std::size_t n = 0;
    for (int i = 0; i < groups; ++i) {
      const char ch = text[from + static_cast<std::size_t>(i)];
      if (!graph6_char(ch)) throw Error(ErrorCode::DecodeError, "graph6 size header has an invalid byte");
      n = (n << 6) | static_cast<std::size_t>(static_cast<unsigned char>(ch) - 63);
    }
    return n;
  };
  if (text.empty()) throw Error(ErrorCode::DecodeError, "empty graph6 string");
  if (!graph6_char(text[0])) throw Error(ErrorCode::DecodeError, "graph6 string starts with an invalid byte");
  if (text[0] != '~') return {static_cast<std::size_t>(text[0] - 63), 1};
  if (text.size() > 1 && text[1] == '~') return {value(2, 6), 8};
  return {value(1, 3), 4};
}

}  // namespace detail

inline std::string encode_graph6(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  detail::append_size(out, n);
  std::vector<std::uint8_t> bits(detail::graph6_data_length(n) * 6, 0);
  for (const auto& e : g.edges()) {
    // e.u < e.v: bit index of x(u, v) in column-major upper triangle
    const auto col = static_cast<std::size_t>(e.v);
    bits[col * (col - 1) / 2 + static_cast<std::size_t>(e.u)] = 1;
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t j = 0; j < 6; ++j) value = (value << 1) | bits[i + j];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

/// Length of the graph6 record at the front of `text`, judged from its header alone.
inline std::size_t graph6_record_length(std::string_view text) {
  const auto header = detail::read_size(text);
  return header.length + detail::graph6_data_length(header.n);
}

inline SimpleGraph decode_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  const auto header = detail::read_size(text);
  const std::size_t n = header.n;
  const std::size_t expected = header.length + detail::graph6_data_length(n);
  if (text.size() != expected)
    throw Error(ErrorCode::DecodeError, "graph6 string for n=" + std::to_string(n) + " must have length " +
                                            std::to_string(expected) + ", got " + std::to_string(text.size()));
  std::vector<Edge> edges;
  const std::size_t bit_count = detail::graph6_bit_count(n);
  std::size_t bit = 0;
  VertexId u = 0, v = 1;
  for (std::size_t i = header.length; i < text.size(); ++i) {
    if (!detail::graph6_char(text[i])) throw Error(ErrorCode::DecodeError, "graph6 data has an invalid byte");
    const int value = static_cast<unsigned char>(text[i]) - 63;
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (value >> shift) & 1;
      if (bit >= bit_count) {
        if (set) throw Error(ErrorCode::DecodeError, "graph6 padding bits must be zero");
        continue;
      }
      if (set) edges.push_back({u, v});
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return SimpleGraph(n, std::move(edges));
}

}  // namespace critplanar
