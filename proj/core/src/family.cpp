#include "specq/family.hpp"

#include <cctype>
#include <vector>

namespace specq {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Graph parse() {
    Graph g = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return g;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw FamilyParseError(msg + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // Digits at the current position, no leading whitespace skip.
  bool raw_int(int& out) {
    size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > Graph::kMaxVertices * Graph::kMaxVertices) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) return false;
    out = static_cast<int>(v);
    return true;
  }

  int integer() {
    skip_ws();
    int v;
    if (!raw_int(v)) fail("expected a number");
    return v;
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Graph expr() {
    Graph g = item();
    while (accept('+')) g = g.disjoint_union(item());
    return g;
  }

  Graph item() {
    skip_ws();
    size_t mark = pos_;
    int reps;
    if (raw_int(reps)) {
      if (accept('*')) {
        if (reps == 0) return Graph(0);
        Graph a = atom();
        Graph g = a;
        for (int i = 1; i < reps; ++i) g = g.disjoint_union(a);
        return g;
      }
      pos_ = mark;
      fail("expected '*' after repetition count");
    }
    return atom();
  }

  Graph atom() {
    skip_ws();
    if (accept('(')) {
      Graph g = expr();
      expect(')');
      return g;
    }
    size_t at = pos_;
    std::string name = identifier();
    if (name == "join") {
      expect('(');
      Graph a = expr();
      expect(',');
      Graph b = expr();
      expect(')');
      return a.join(b);
    }
    if (name == "complement") {
      expect('(');
      Graph g = expr();
      expect(')');
      return g.complement();
    }
    if (name.size() != 1) {
      pos_ = at;
      fail(name.empty() ? "expected a graph term" : "unknown family '" + name + "'");
    }
    switch (name[0]) {
      case 'K': return complete_family();
      case 'S': return Graph::star(integer());
      case 'P': return Graph::path(integer());
      case 'C': return Graph::cycle(integer());
      case 'G': {
        expect('(');
        int p = integer();
        expect(',');
        int ell = integer();
        expect(',');
        int q = integer();
        expect(')');
        return Graph::double_starlike(p, ell, q);
      }
      default:
        pos_ = at;
        fail("unknown family '" + name + "'");
    }
  }

  // After the leading 'K'.
  Graph complete_family() {
    if (accept('(')) {
      std::vector<int> parts;
      parts.push_back(integer());
      while (accept(',')) parts.push_back(integer());
      expect(')');
      return Graph::complete_multipartite(parts);
    }
    int a = integer();
    // Compact forms bind with no whitespace: K2,5 and K4-e.
    if (peek() == ',' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      int b;
      raw_int(b);
      Graph g = Graph::complete_bipartite(a, b);
      if (minus_edge()) {
        if (a < 1 || b < 1) fail("no edge to remove");
        g.remove_edge(0, a);
      }
      return g;
    }
    if (minus_edge()) return Graph::complete_minus_edge(a);
    return Graph::complete(a);
  }

  bool minus_edge() {
    if (peek() == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'e') {
      pos_ += 2;
      return true;
    }
    return false;
  }
};

}  // namespace

Graph parse_family(const std::string& text) { return Parser(text).parse(); }

}  // namespace specq
