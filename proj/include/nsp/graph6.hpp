#ifndef NSP_GRAPH6_HPP
#define NSP_GRAPH6_HPP

// graph6 / sparse6 codecs (headerless, as written by nauty's showg/geng) and
// a plain "u v" edge-list fallback.

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nsp/graph.hpp"

namespace nsp {

namespace detail {

inline void encode_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

inline int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside printable range 63..126", pos);
  return c - 63;
}

/// Reads N(n); returns the position after it.
inline std::size_t decode_order(std::string_view s, std::size_t pos, int& n) {
  const int first = sextet(s, pos);
  if (first < 63) {
    n = first;
    return pos + 1;
  }
  if (pos + 1 < s.size() && s[pos + 1] == 126) throw TooLarge("orders above 258047 are not supported");
  long value = 0;
  for (int i = 1; i <= 3; ++i) value = (value << 6) | sextet(s, pos + i);
  if (value > kMaxVertices) throw TooLarge("graph order " + std::to_string(value) + " exceeds 64");
  n = static_cast<int>(value);
  return pos + 4;
}

class BitWriter {
 public:
  explicit BitWriter(std::string& out) : out_(out) {}
  void put(bool b) {
    acc_ = (acc_ << 1) | (b ? 1 : 0);
    if (++fill_ == 6) flush_full();
  }
  void put_bits(long value, int width) {
    for (int i = width - 1; i >= 0; --i) put(((value >> i) & 1) != 0);
  }
  int pending() const { return fill_; }
  /// Pads the final partial sextet with `pad` bits.
  void finish(bool pad) {
    while (fill_ != 0) put(pad);
  }

 private:
  void flush_full() {
    out_.push_back(static_cast<char>(acc_ + 63));
    acc_ = 0;
    fill_ = 0;
  }
  std::string& out_;
  int acc_ = 0;
  int fill_ = 0;
};

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  std::string out;
  detail::encode_order(out, g.order());
  detail::BitWriter w(out);
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) w.put(g.has_edge(i, j));
  w.finish(false);
  return out;
}

inline std::string to_sparse6(const Graph& g) {
  const int n = g.order();
  std::string out = ":";
  detail::encode_order(out, n);
  int k = 0;
  while ((1L << k) < n) ++k;  // bits needed for n-1

  detail::BitWriter w(out);
  int last = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (!g.has_edge(i, j)) continue;
      if (j == last) {
        w.put(false);
      } else {
        w.put(true);
        if (j > last + 1) {
          w.put_bits(j, k);
          w.put(false);
        }
        last = j;
      }
      w.put_bits(i, k);
    }
  }
  // Padding with ones could otherwise decode as an extra edge to n-1.
  const int pad = (6 - w.pending()) % 6;
  if (k < 6 && n == (1 << k) && last == n - 2 && pad >= k + 1) w.put(false);
  w.finish(true);
  return out;
}

inline Graph parse_graph6(std::string_view s) {
  std::size_t pos = 0;
  if (s.starts_with(">>graph6<<")) pos = 10;
  int n = 0;
  pos = detail::decode_order(s, pos, n);
  Graph g(n);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() - pos < need) throw ParseError("graph6 body too short for order " + std::to_string(n), s.size());
  if (s.size() - pos > need) throw ParseError("trailing bytes after graph6 body", pos + need);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = detail::sextet(s, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

inline Graph parse_sparse6(std::string_view s) {
  std::size_t pos = 0;
  if (s.starts_with(">>sparse6<<")) pos = 11;
  if (pos >= s.size() || s[pos] != ':') throw ParseError("sparse6 must start with ':'", pos);
  int n = 0;
  pos = detail::decode_order(s, pos + 1, n);
  Graph g(n);
  int k = 0;
  while ((1L << k) < n) ++k;

  const std::size_t total_bits = (s.size() - pos) * 6;
  std::size_t cursor = 0;
  auto get = [&](std::size_t at) {
    const int byte = detail::sextet(s, pos + at / 6);
    return (byte >> (5 - at % 6)) & 1;
  };
  long v = 0;
  while (cursor + 1 + k <= total_bits) {
    const int b = get(cursor++);
    long x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | get(cursor++);
    if (b) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
    } else if (x != v) {
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
    } else {
      throw ParseError("self-loop in sparse6 stream", pos + (cursor - 1) / 6);
    }
  }
  return g;
}

/// Detects sparse6 by its leading ':'.
inline Graph parse_graph_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  if (s.starts_with(":") || s.starts_with(">>sparse6<<")) return parse_sparse6(s);
  return parse_graph6(s);
}

/// Reads one graph per non-empty line.
inline std::vector<Graph> read_graph_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(parse_graph_line(line));
  }
  return out;
}

/// Edge-list text: optional first line holding only the order, then "u v" lines.
/// Lines starting with '#' are comments.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_vertex = -1;
  std::string line;
  std::size_t offset = 0;
  bool first = true;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long a = 0;
    long b = 0;
    if (!(ls >> a)) throw ParseError("expected vertex index", line_start);
    if (!(ls >> b)) {
      if (!first) throw ParseError("expected 'u v'", line_start);
      declared = static_cast<int>(a);
      first = false;
      continue;
    }
    first = false;
    if (a < 0 || b < 0 || a >= kMaxVertices || b >= kMaxVertices) throw ParseError("vertex index out of range", line_start);
    if (a == b) throw ParseError("self-loop", line_start);
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    max_vertex = std::max<int>(max_vertex, static_cast<int>(std::max(a, b)));
  }
  const int n = declared >= 0 ? declared : max_vertex + 1;
  if (max_vertex >= n) throw ParseError("edge endpoint exceeds declared order", 0);
  return Graph(n, edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace nsp

#endif  // NSP_GRAPH6_HPP
