#include "afpoly/hextree.hpp"

#include <algorithm>
#include <cctype>

namespace afpoly {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_blanks() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_blanks();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_blanks();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char take() {
    skip_blanks();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input");
    return text_[pos_++];
  }

  void expect(char c) {
    char got = take();
    if (got != c)
      throw ParseError(std::string("expected '") + c + "', got '" + got + "'");
  }

  long take_integer() {
    skip_blanks();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError("integer out of range");
      ++pos_;
    }
    return neg ? -v : v;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

struct TreeBuilder {
  std::vector<Axial> cells;
  std::vector<Fusion> fusions;

  void parse_node(Scanner& sc, int cell) {
    sc.expect('{');
    while (sc.peek() != '}') {
      char c = sc.take();
      if (c < '0' || c > '5') throw ParseError("expected a direction digit 0..5 or '}'");
      int dir = c - '0';
      int child = static_cast<int>(cells.size());
      cells.push_back(step(cells[cell], dir));
      fusions.push_back({cell, child, dir});
      parse_node(sc, child);
    }
    sc.expect('}');
  }
};

HexSystem parse_hextree(Scanner& sc) {
  TreeBuilder tb;
  tb.cells.push_back({0, 0});
  tb.parse_node(sc, 0);
  if (!sc.done()) throw ParseError("trailing input after system description");
  return HexSystem::from_tree(std::move(tb.cells), std::move(tb.fusions), 0);
}

HexSystem parse_chain(Scanner& sc) {
  std::vector<int> turns;
  while (!sc.done()) {
    char c = sc.take();
    switch (c) {
      case 'L': turns.push_back(1); break;
      case 'S': turns.push_back(0); break;
      case 'R': turns.push_back(-1); break;
      default: throw ParseError("chain turns must be L, S, or R");
    }
  }
  return build_chain_from_turns(turns);
}

HexSystem parse_hl(Scanner& sc) {
  std::vector<long> runs;
  if (!sc.done()) {
    runs.push_back(sc.take_integer());
    while (!sc.done()) {
      sc.expect(',');
      runs.push_back(sc.take_integer());
    }
  }
  std::vector<int> turns;
  for (size_t i = 0; i < runs.size(); ++i) {
    if (runs[i] < 0) throw ParseError("segment runs must be >= 0");
    if (i > 0) turns.push_back(1);
    turns.insert(turns.end(), static_cast<size_t>(runs[i]), 0);
  }
  if (runs.empty()) return HexSystem::from_cells({{0, 0}});
  return build_chain_from_turns(turns);
}

}  // namespace

HexSystem parse_system(std::string_view text) {
  Scanner sc(text);
  char first = sc.peek();
  if (first == 'H') {
    sc.take();
    if (sc.peek() == 'l') {
      sc.take();
      sc.expect(':');
      return parse_hl(sc);
    }
    return parse_hextree(sc);
  }
  if (first == 'C') {
    sc.take();
    sc.expect(':');
    return parse_chain(sc);
  }
  throw ParseError("input must start with 'H{', 'Hl:', or 'C:'");
}

std::string to_hextree(const HexSystem& hs) {
  std::vector<std::vector<std::pair<int, int>>> children(hs.size());
  for (const Fusion& f : hs.fusions()) children[f.parent].push_back({f.dir, f.child});
  for (auto& c : children) std::sort(c.begin(), c.end());

  std::string out = "H";
  // Iterative DFS emitting braces.
  struct Frame {
    int cell;
    size_t next = 0;
  };
  std::vector<Frame> stack{{hs.root()}};
  out += '{';
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < children[f.cell].size()) {
      auto [dir, child] = children[f.cell][f.next++];
      out += static_cast<char>('0' + dir);
      out += '{';
      stack.push_back({child});
    } else {
      out += '}';
      stack.pop_back();
    }
  }
  return out;
}

HexSystem build_chain_from_turns(const std::vector<int>& turns) {
  std::vector<Axial> cells{{0, 0}};
  int dir = 0;
  cells.push_back(step(cells.back(), dir));
  for (int t : turns) {
    if (t < -1 || t > 1) throw ParseError("turn values must be -1, 0, or +1");
    dir = ((dir + t) % 6 + 6) % 6;
    cells.push_back(step(cells.back(), dir));
  }
  return HexSystem::from_cells(std::move(cells));
}

}  // namespace afpoly
