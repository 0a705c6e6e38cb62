#include "core/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <tuple>
#include <vector>

namespace graphfp {

Format parse_format_name(std::string_view name) {
  if (name == "graph6") return Format::graph6;
  if (name == "sparse6") return Format::sparse6;
  if (name == "edgelist") return Format::edgelist;
  throw ArgumentError("unknown format: " + std::string(name));
}

const char* format_name(Format f) {
  switch (f) {
    case Format::graph6: return "graph6";
    case Format::sparse6: return "sparse6";
    case Format::edgelist: return "edgelist";
  }
  return "?";
}

namespace {

// ---- six-bit character streams shared by graph6 and sparse6 ----

class BitReader {
 public:
  BitReader(std::string_view s, size_t pos) : s_(s), pos_(pos) {}

  size_t bits_left() const { return (s_.size() - pos_) * 6 - used_; }

  unsigned read(int count) {
    unsigned v = 0;
    for (int b = 0; b < count; ++b) {
      if (pos_ >= s_.size())
        throw FormatError("truncated bit stream", s_.size());
      unsigned char c = static_cast<unsigned char>(s_[pos_]);
      if (c < 63 || c > 126)
        throw FormatError("non-ASCII or out-of-range payload char", pos_);
      unsigned six = c - 63;
      v = (v << 1) | ((six >> (5 - used_)) & 1u);
      if (++used_ == 6) {
        used_ = 0;
        ++pos_;
      }
    }
    return v;
  }

  size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  size_t pos_;
  int used_ = 0;
};

class BitWriter {
 public:
  void write(unsigned value, int count) {
    for (int b = count - 1; b >= 0; --b) push((value >> b) & 1u);
  }
  void push(unsigned bit) {
    cur_ = (cur_ << 1) | bit;
    if (++used_ == 6) flush_char();
  }
  size_t bit_count() const { return out_.size() * 6 + used_; }
  std::string finish_padded_with(unsigned first_pad_bit, unsigned rest_bits) {
    if (used_ > 0) {
      push(first_pad_bit);
      while (used_ > 0) push(rest_bits);
    }
    return out_;
  }

 private:
  void flush_char() {
    out_.push_back(static_cast<char>(cur_ + 63));
    cur_ = 0;
    used_ = 0;
  }
  std::string out_;
  unsigned cur_ = 0;
  int used_ = 0;
};

int decode_order(std::string_view s, size_t& pos) {
  auto ch = [&](size_t p) -> unsigned {
    if (p >= s.size()) throw FormatError("truncated size header", s.size());
    unsigned char c = static_cast<unsigned char>(s[p]);
    if (c < 63 || c > 126) throw FormatError("bad size header char", p);
    return c - 63u;
  };
  unsigned c0 = ch(pos);
  if (c0 <= 62) {
    pos += 1;
    return static_cast<int>(c0);
  }
  if (ch(pos + 1) <= 62) {
    long n = (static_cast<long>(ch(pos + 1)) << 12) |
             (static_cast<long>(ch(pos + 2)) << 6) | ch(pos + 3);
    pos += 4;
    if (n > 1'000'000) throw FormatError("graph too large", pos);
    return static_cast<int>(n);
  }
  throw FormatError("oversized graph order not supported", pos);
}

void encode_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

size_t skip_optional_header(std::string_view& s, std::string_view header) {
  if (s.substr(0, header.size()) == header) {
    s.remove_prefix(header.size());
    return header.size();
  }
  return 0;
}

std::string_view trim_trailing_newline(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// ---- graph6 ----

Graph parse_graph6(std::string_view s) {
  skip_optional_header(s, ">>graph6<<");
  s = trim_trailing_newline(s);
  size_t pos = 0;
  const int n = decode_order(s, pos);
  Graph g(n);
  BitReader bits(s, pos);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits.read(1)) g.add_edge(i, j);
  if (bits.pos() + (bits.bits_left() > 0 ? 1 : 0) < s.size())
    throw FormatError("trailing bytes after graph6 payload", bits.pos());
  return g;
}

std::string serialize_graph6(const Graph& g) {
  if (g.loop_count() > 0)
    throw UnsupportedFeatureError("graph6 cannot encode loops");
  std::string out;
  const int n = g.node_count();
  encode_order(out, n);
  BitWriter bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push(g.has_edge(i, j) ? 1u : 0u);
  out += bits.finish_padded_with(0, 0);
  return out;
}

// ---- sparse6 ----

int bits_for(int n) {  // bits needed to represent n-1
  int k = 1;
  while ((1 << k) < n) ++k;
  return k;
}

Graph parse_sparse6(std::string_view s) {
  size_t base = skip_optional_header(s, ">>sparse6<<");
  (void)base;
  s = trim_trailing_newline(s);
  if (s.empty() || s[0] != ':')
    throw FormatError("sparse6 must start with ':'", 0);
  size_t pos = 1;
  const int n = decode_order(s, pos);
  Graph g(n);
  if (n == 0) return g;
  const int k = bits_for(n);
  BitReader bits(s, pos);
  long v = 0;
  while (bits.bits_left() >= static_cast<size_t>(k) + 1) {
    unsigned b = bits.read(1);
    unsigned x = bits.read(k);
    if (b) ++v;
    if (v >= n) break;
    if (x >= static_cast<unsigned>(n)) break;  // padding
    if (static_cast<long>(x) > v) {
      v = x;
    } else {
      if (g.has_edge(static_cast<int>(x), static_cast<int>(v)))
        throw FormatError("duplicate edge in sparse6 stream", bits.pos());
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return g;
}

std::string serialize_sparse6(const Graph& g) {
  const int n = g.node_count();
  std::string out = ":";
  encode_order(out, n);
  if (n == 0) return out;
  const int k = bits_for(n);

  std::vector<std::pair<int, int>> edges;  // (max, min)
  for (int i = 0; i < n; ++i) {
    if (g.has_loop(i)) edges.emplace_back(i, i);
    for (int j : g.neighbors(i))
      if (j <= i) edges.emplace_back(i, j);
  }
  std::sort(edges.begin(), edges.end());

  BitWriter bits;
  long v = 0;
  for (auto [w, u] : edges) {
    if (w == v) {
      bits.push(0);
      bits.write(static_cast<unsigned>(u), k);
    } else if (w == v + 1) {
      v = w;
      bits.push(1);
      bits.write(static_cast<unsigned>(u), k);
    } else {
      v = w;
      bits.push(0);
      bits.write(static_cast<unsigned>(w), k);
      bits.push(0);
      bits.write(static_cast<unsigned>(u), k);
    }
  }

  // Padding is 1s, except the documented power-of-two corner: an all-ones
  // group of length > k would decode as one extra edge at vertex n-1.
  unsigned first_pad = 1;
  size_t pad = (6 - bits.bit_count() % 6) % 6;
  if (k < 6 && n == (1 << k) && pad > static_cast<size_t>(k) &&
      g.node_count() >= 2 && g.degree(n - 1) == 0 && g.degree(n - 2) > 0)
    first_pad = 0;
  out += bits.finish_padded_with(first_pad, 1);
  return out;
}

// ---- edgelist ----
// First line "n", then one "i j" pair per line; i == j denotes a loop.

Graph parse_edgelist(std::string_view s) {
  size_t pos = 0;
  auto skip_ws = [&](bool newline_ok) {
    while (pos < s.size() &&
           (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' ||
            (newline_ok && s[pos] == '\n')))
      ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws(true);
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw FormatError("expected integer", start);
    int value = 0;
    auto res = std::from_chars(s.data() + start, s.data() + pos, value);
    if (res.ec != std::errc()) throw FormatError("bad integer", start);
    return value;
  };

  const int n = read_int();
  Graph g(n);
  while (true) {
    skip_ws(true);
    if (pos >= s.size()) break;
    size_t at = pos;
    int i = read_int();
    int j = read_int();
    if (i >= n || j >= n) throw FormatError("node index out of range", at);
    if (g.has_edge(i, j)) throw FormatError("duplicate edge line", at);
    g.add_edge(i, j);
  }
  return g;
}

std::string serialize_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.node_count() << '\n';
  for (int i = 0; i < g.node_count(); ++i) {
    if (g.has_loop(i)) out << i << ' ' << i << '\n';
    for (int j : g.neighbors(i))
      if (i < j) out << i << ' ' << j << '\n';
  }
  return out.str();
}

}  // namespace

Graph parse_graph(std::string_view bytes, Format format) {
  switch (format) {
    case Format::graph6: return parse_graph6(bytes);
    case Format::sparse6: return parse_sparse6(bytes);
    case Format::edgelist: return parse_edgelist(bytes);
  }
  throw ArgumentError("bad format enum");
}

std::string serialize_graph(const Graph& g, Format format) {
  switch (format) {
    case Format::graph6: return serialize_graph6(g);
    case Format::sparse6: return serialize_sparse6(g);
    case Format::edgelist: return serialize_edgelist(g);
  }
  throw ArgumentError("bad format enum");
}

}  // namespace graphfp
