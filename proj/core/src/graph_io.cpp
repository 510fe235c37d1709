#include "specq/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specq {
namespace {

constexpr const char* kGraph6Header = ">>graph6<<";
constexpr const char* kSparse6Header = ">>sparse6<<";

class BitWriter {
 public:
  void put(int bit) {
    cur_ = (cur_ << 1) | (bit & 1);
    if (++used_ == 6) flush_group();
  }
  void put_bits(uint32_t value, int width) {
    for (int i = width - 1; i >= 0; --i) put(static_cast<int>((value >> i) & 1u));
  }
  int pending() const { return used_ == 0 ? 0 : 6 - used_; }
  void pad_with_ones() {
    while (used_ != 0) put(1);
  }
  const std::string& str() const { return out_; }

 private:
  void flush_group() {
    out_.push_back(static_cast<char>(cur_ + 63));
    cur_ = 0;
    used_ = 0;
  }
  std::string out_;
  int cur_ = 0;
  int used_ = 0;
};

class BitReader {
 public:
  BitReader(const std::string& s, size_t pos, size_t base)
      : s_(s), pos_(pos), base_(base) {}
  bool has(int bits) const { return (s_.size() - pos_) * 6 - static_cast<size_t>(used_) >= static_cast<size_t>(bits); }
  int get() {
    if (pos_ >= s_.size()) throw GraphParseError("truncated graph string", base_ + pos_);
    int c = s_[pos_] - 63;
    if (c < 0 || c > 63) throw GraphParseError("bad character in graph string", base_ + pos_);
    int bit = (c >> (5 - used_)) & 1;
    if (++used_ == 6) {
      used_ = 0;
      ++pos_;
    }
    return bit;
  }
  uint32_t get_bits(int width) {
    uint32_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<uint32_t>(get());
    return v;
  }
  // Position of the next unread byte (a partially consumed byte counts as
  // read).
  size_t byte_pos() const { return base_ + pos_ + (used_ > 0 ? 1 : 0); }
  bool at_end() const { return pos_ + (used_ > 0 ? 1 : 0) >= s_.size(); }

 private:
  const std::string& s_;
  size_t pos_;
  size_t base_;
  int used_ = 0;
};

int read_order(const std::string& s, size_t& pos, size_t base) {
  if (pos >= s.size()) throw GraphParseError("empty graph string", base + pos);
  int c = s[pos] - 63;
  if (c < 0 || c > 63) throw GraphParseError("bad character in graph string", base + pos);
  if (c < 63) {
    ++pos;
    return c;
  }
  // 18-bit or 36-bit order; anything beyond the representation is rejected.
  if (pos + 3 >= s.size()) throw GraphParseError("truncated graph string", base + s.size());
  if (s[pos + 1] == '~') throw GraphParseError("graph order exceeds 32", base + pos);
  long n = 0;
  for (size_t i = pos + 1; i <= pos + 3; ++i) {
    int d = s[i] - 63;
    if (d < 0 || d > 63) throw GraphParseError("bad character in graph string", base + i);
    n = (n << 6) | d;
  }
  pos += 4;
  if (n > Graph::kMaxVertices) throw GraphParseError("graph order exceeds 32", base + pos - 4);
  return static_cast<int>(n);
}

// Returns the payload and its byte offset in the original string.
std::pair<std::string, size_t> strip_header(const std::string& s, const char* header) {
  std::string t = s;
  while (!t.empty() && (t.back() == '\n' || t.back() == '\r' || t.back() == ' ')) t.pop_back();
  size_t start = t.find_first_not_of(" \t");
  if (start == std::string::npos) return {"", s.size()};
  t = t.substr(start);
  const std::string h(header);
  if (t.rfind(h, 0) == 0) {
    t = t.substr(h.size());
    start += h.size();
  }
  return {t, start};
}

int bits_for(int n) {
  int k = 1;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  BitWriter w;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) w.put(g.has_edge(u, v) ? 1 : 0);
  const int pad = w.pending();
  for (int i = 0; i < pad; ++i) w.put(0);
  return out + w.str();
}

Graph from_graph6(const std::string& s) {
  auto [t, base] = strip_header(s, kGraph6Header);
  size_t pos = 0;
  const int n = read_order(t, pos, base);
  Graph g(n);
  BitReader r(t, pos, base);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (r.get()) g.add_edge(u, v);
  if (!r.at_end()) throw GraphParseError("trailing characters after graph data", r.byte_pos());
  return g;
}

std::string to_sparse6(const Graph& g) {
  const int n = g.order();
  std::string out = ":";
  out.push_back(static_cast<char>(n + 63));
  const int k = bits_for(std::max(n, 1));
  BitWriter w;
  int v = 0;
  auto es = g.edges();
  // sorted by larger endpoint, then smaller
  std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  for (const auto& [u, wv] : es) {
    if (wv == v) {
      w.put(0);
      w.put_bits(static_cast<uint32_t>(u), k);
    } else if (wv == v + 1) {
      v = wv;
      w.put(1);
      w.put_bits(static_cast<uint32_t>(u), k);
    } else {
      v = wv;
      w.put(1);
      w.put_bits(static_cast<uint32_t>(wv), k);
      w.put(0);
      w.put_bits(static_cast<uint32_t>(u), k);
    }
  }
  // all-ones padding, with one zero bit first when n is a power of two and
  // the padding alone could be misread as one more entry
  if (w.pending() > 0 && k < 6 && n == (1 << k) && w.pending() >= k && v < n - 1) w.put(0);
  w.pad_with_ones();
  return out + w.str();
}

Graph from_sparse6(const std::string& s) {
  auto [t, base] = strip_header(s, kSparse6Header);
  if (t.empty() || t[0] != ':') throw GraphParseError("sparse6 strings start with ':'", base);
  size_t pos = 1;
  const int n = read_order(t, pos, base);
  Graph g(n);
  if (n == 0) return g;
  const int k = bits_for(std::max(n, 1));
  BitReader r(t, pos, base);
  int v = 0;
  while (r.has(1 + k)) {
    int b = r.get();
    int x = static_cast<int>(r.get_bits(k));
    if (b) ++v;
    if (v >= n) break;
    if (x > v)
      v = x;
    else if (x < n)
      g.add_edge(x, v);
  }
  return g;
}

Graph parse_graph(const std::string& line) {
  auto [t, base] = strip_header(line, kGraph6Header);
  auto [u, extra] = strip_header(t, kSparse6Header);
  try {
    if (!u.empty() && u[0] == ':') return from_sparse6(u);
    return from_graph6(u);
  } catch (GraphParseError& e) {
    e.offset += base + extra;
    throw;
  }
}

std::string to_adjacency_text(const Graph& g) {
  std::string out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) out.push_back(g.has_edge(u, v) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string to_adjacency_list(const Graph& g) {
  std::string out = std::to_string(g.order());
  out.push_back('\n');
  for (int u = 0; u < g.order(); ++u) {
    out += std::to_string(u);
    out.push_back(':');
    for (int v = 0; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) continue;
      out.push_back(' ');
      out += std::to_string(v);
    }
    out.push_back('\n');
  }
  return out;
}

Graph from_adjacency_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    if (row >> n) break;
    row.clear();
    std::string word;
    if (row >> word) throw std::invalid_argument("adjacency list: expected the order, got \"" + word + "\"");
  }
  if (n < 0) throw std::invalid_argument("adjacency list: missing order line");
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("adjacency list: order " + std::to_string(n) + " exceeds the supported maximum " +
                                std::to_string(Graph::kMaxVertices));
  Graph g(n);
  std::vector<std::vector<bool>> seen(static_cast<size_t>(std::max(n, 1)),
                                      std::vector<bool>(static_cast<size_t>(std::max(n, 1)), false));
  while (std::getline(in, line)) {
    size_t colon = line.find(':');
    std::string head = line.substr(0, colon == std::string::npos ? line.size() : colon);
    std::istringstream hv(head);
    int u;
    if (!(hv >> u)) {
      std::string word;
      std::istringstream blank(line);
      if (blank >> word) throw std::invalid_argument("adjacency list: bad row \"" + line + "\"");
      continue;
    }
    if (colon == std::string::npos) throw std::invalid_argument("adjacency list: missing ':' in row \"" + line + "\"");
    if (u < 0 || u >= n) throw std::invalid_argument("adjacency list: vertex " + std::to_string(u) + " out of range");
    std::istringstream nb(line.substr(colon + 1));
    int v;
    while (nb >> v) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("adjacency list: neighbour " + std::to_string(v) + " out of range");
      if (v == u) throw std::invalid_argument("adjacency list: loop at vertex " + std::to_string(u));
      seen[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
      g.add_edge(u, v);
    }
    std::string rest;
    if (nb.clear(), nb >> rest)
      throw std::invalid_argument("adjacency list: bad neighbour \"" + rest + "\" in row of vertex " +
                                  std::to_string(u));
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (seen[static_cast<size_t>(u)][static_cast<size_t>(v)] && !seen[static_cast<size_t>(v)][static_cast<size_t>(u)])
        throw std::invalid_argument("adjacency list: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " listed only from one endpoint");
  return g;
}

}  // namespace specq
