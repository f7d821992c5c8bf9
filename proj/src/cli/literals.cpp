#include "unicell/cli/literals.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace unicell::cli {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!eat(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) throw ParseError(start, "integer too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError(start, "expected an integer");
    return static_cast<int>(negative ? -value : value);
  }

  bool at_integer() {
    skip_ws();
    return pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-');
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) throw ParseError(start, "expected a field name");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

using FieldHandler = std::function<void(const std::string& key, std::size_t key_pos, Cursor& c)>;

void parse_fields(std::string_view text, const FieldHandler& handle) {
  Cursor c(text);
  std::set<std::string> seen;
  while (!c.at_end()) {
    const std::size_t key_pos = c.pos();
    std::string key = c.identifier();
    if (!seen.insert(key).second) throw ParseError(key_pos, "duplicate field '" + key + "'");
    c.expect('=');
    handle(key, key_pos, c);
    if (c.at_end()) break;
    c.expect(';');
  }
}

std::vector<int> int_list(Cursor& c) {
  std::vector<int> out;
  c.expect('(');
  while (!c.eat(')')) {
    if (!out.empty()) c.eat(',');
    out.push_back(c.integer());
  }
  return out;
}

std::vector<std::vector<int>> cycles(Cursor& c) {
  std::vector<std::vector<int>> out;
  if (!c.peek('(')) throw ParseError(c.pos(), "expected '('");
  while (c.peek('(')) {
    const std::size_t start = c.pos();
    out.push_back(int_list(c));
    if (out.back().empty()) throw ParseError(start, "empty cycle");
  }
  return out;
}

void require_half_edge(int h, std::size_t pos, int count) {
  if (h < 0 || h >= count) throw ParseError(pos, "half-edge " + std::to_string(h) + " out of range");
}

}  // namespace

ColoredUnicellularMap parse_gluing(std::string_view text) {
  std::optional<int> n;
  std::optional<int> q;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> twisted;
  std::vector<int> colors;
  bool have_pairs = false, have_colors = false;
  std::size_t colors_pos = 0, pairs_pos = 0;
  parse_fields(text, [&](const std::string& key, std::size_t key_pos, Cursor& c) {
    if (key == "n") {
      n = c.integer();
    } else if (key == "q") {
      q = c.integer();
    } else if (key == "pairs") {
      have_pairs = true;
      pairs_pos = key_pos;
      c.expect('(');
      while (!c.eat(')')) {
        if (!pairs.empty()) c.expect(',');
        int a = c.integer();
        int b = c.integer();
        pairs.emplace_back(a, b);
        twisted.push_back(c.eat('!'));
      }
    } else if (key == "colors") {
      have_colors = true;
      colors_pos = key_pos;
      colors = int_list(c);
    } else {
      throw ParseError(key_pos, "unknown field '" + key + "'");
    }
  });
  if (!n) throw ParseError(text.size(), "missing field 'n'");
  if (!have_pairs) throw ParseError(text.size(), "missing field 'pairs'");
  if (*n < 1) throw ParseError(0, "n must be positive");
  if (static_cast<int>(pairs.size()) != *n) throw ParseError(pairs_pos, "pairs must list exactly n pairs");
  PolygonGluing g = [&] {
    try {
      return PolygonGluing(*n, pairs, twisted);
    } catch (const std::invalid_argument& e) {
      throw ParseError(pairs_pos, e.what());
    }
  }();
  const int v = glue_polygon(g).vertex_count;
  if (!have_colors) colors.assign(v, 1);
  if (static_cast<int>(colors.size()) != v)
    throw ParseError(colors_pos, "colors must list one color per vertex (" + std::to_string(v) + ")");
  int top = 0;
  for (int& col : colors) {
    if (col < 1) throw ParseError(colors_pos, "colors are 1-based");
    top = std::max(top, col);
    --col;
  }
  try {
    return ColoredUnicellularMap(std::move(g), std::move(colors), q.value_or(top));
  } catch (const std::invalid_argument& e) {
    throw ParseError(colors_pos, e.what());
  }
}

std::string format_gluing(const ColoredUnicellularMap& u) {
  std::string s = "n=" + std::to_string(u.n()) + "; pairs=(";
  const auto pairs = u.gluing().pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(pairs[k].first) + " " + std::to_string(pairs[k].second);
    if (u.gluing().twisted_side(pairs[k].first)) s += "!";
  }
  s += "); colors=(";
  for (std::size_t k = 0; k < u.colors().size(); ++k) {
    if (k) s += " ";
    s += std::to_string(u.colors()[k] + 1);
  }
  return s + ")";
}

RotationLiteral parse_rotation(std::string_view text) {
  RotationLiteral r;
  std::vector<std::vector<int>> sigma_cycles, alpha_cycles;
  std::vector<int> outs, ins, tree;
  std::size_t sigma_pos = 0, alpha_pos = 0, out_pos = 0, in_pos = 0, labels_pos = 0, tree_pos = 0, root_pos = 0,
              outer_pos = 0;
  bool have_sigma = false;
  parse_fields(text, [&](const std::string& key, std::size_t key_pos, Cursor& c) {
    if (key == "sigma") {
      have_sigma = true;
      sigma_pos = key_pos;
      sigma_cycles = cycles(c);
    } else if (key == "alpha") {
      alpha_pos = key_pos;
      if (!c.peek('(')) throw ParseError(c.pos(), "expected '('");
      Cursor probe = c;
      probe.expect('(');
      if (probe.eat(')')) {
        c = probe;
        return;
      }
      while (c.peek('(')) {
        const std::size_t start = c.pos();
        alpha_cycles.push_back(int_list(c));
        if (alpha_cycles.back().size() != 2) throw ParseError(start, "alpha cycles must have length 2");
      }
    } else if (key == "root") {
      root_pos = key_pos;
      r.root = c.integer();
    } else if (key == "outer") {
      outer_pos = key_pos;
      r.outer = c.integer();
    } else if (key == "out") {
      out_pos = key_pos;
      outs = int_list(c);
    } else if (key == "in") {
      in_pos = key_pos;
      ins = int_list(c);
    } else if (key == "labels") {
      labels_pos = key_pos;
      r.labels = int_list(c);
    } else if (key == "tree") {
      tree_pos = key_pos;
      tree = int_list(c);
    } else {
      throw ParseError(key_pos, "unknown field '" + key + "'");
    }
  });
  if (!have_sigma) throw ParseError(text.size(), "missing field 'sigma'");
  int count = 0;
  for (const auto& cyc : sigma_cycles)
    for (int h : cyc) count = std::max(count, h + 1);
  r.sigma.assign(count, -1);
  for (const auto& cyc : sigma_cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      require_half_edge(cyc[k], sigma_pos, count);
      if (r.sigma[cyc[k]] != -1) throw ParseError(sigma_pos, "half-edge " + std::to_string(cyc[k]) + " repeated");
      r.sigma[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  }
  for (int h = 0; h < count; ++h)
    if (r.sigma[h] == -1) throw ParseError(sigma_pos, "half-edge " + std::to_string(h) + " missing from sigma");
  r.alpha.assign(count, -1);
  for (const auto& cyc : alpha_cycles) {
    for (int h : cyc) {
      require_half_edge(h, alpha_pos, count);
      if (r.alpha[h] != -1) throw ParseError(alpha_pos, "half-edge " + std::to_string(h) + " repeated");
    }
    if (cyc[0] == cyc[1]) throw ParseError(alpha_pos, "alpha has a fixed point");
    r.alpha[cyc[0]] = cyc[1];
    r.alpha[cyc[1]] = cyc[0];
  }
  require_half_edge(r.root, root_pos, count);
  if (r.outer) require_half_edge(*r.outer, outer_pos, count);
  r.arrow.assign(count, Arrow::none);
  for (int h : outs) {
    require_half_edge(h, out_pos, count);
    r.arrow[h] = Arrow::out;
  }
  for (int h : ins) {
    require_half_edge(h, in_pos, count);
    if (r.arrow[h] != Arrow::none) throw ParseError(in_pos, "half-edge " + std::to_string(h) + " is both out and in");
    r.arrow[h] = Arrow::in;
  }
  for (int& l : r.labels) {
    if (l < 1) throw ParseError(labels_pos, "labels are 1-based");
    --l;
  }
  r.tree.assign(count, 0);
  for (int h : tree) {
    require_half_edge(h, tree_pos, count);
    if (r.alpha[h] < 0) throw ParseError(tree_pos, "tree half-edge " + std::to_string(h) + " is a bud");
    r.tree[h] = r.tree[r.alpha[h]] = 1;
  }
  return r;
}

RootedMap to_rooted_map(const RotationLiteral& r) {
  for (int a : r.alpha)
    if (a < 0) throw std::invalid_argument("a map literal cannot contain buds");
  return RootedMap(r.sigma, r.alpha, r.root);
}

PlaneMap to_plane_map(const RotationLiteral& r) {
  if (!r.outer) throw std::invalid_argument("a plane map literal needs outer=<half-edge>");
  return PlaneMap(to_rooted_map(r), *r.outer);
}

NearEulerianTree to_near_eulerian_tree(const RotationLiteral& r) {
  NearEulerianTree t{r.sigma, r.alpha, r.arrow, r.root};
  validate_near_eulerian(t);
  return t;
}

TreeRootedMap to_tree_rooted_map(const RotationLiteral& r) {
  RootedMap map = to_rooted_map(r);
  TreeRootedMap t{map, r.labels, r.tree};
  validate_tree_rooted(t);
  return t;
}

std::string format_cycles(const std::vector<int>& perm) {
  std::string s;
  std::vector<char> done(perm.size(), 0);
  for (std::size_t h = 0; h < perm.size(); ++h) {
    if (done[h] || perm[h] < 0) continue;
    s += "(";
    int x = static_cast<int>(h);
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) s += " ";
      s += std::to_string(x);
      first = false;
      x = perm[x];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

namespace {

std::string list(const std::vector<int>& values) {
  std::string s = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += " ";
    s += std::to_string(values[k]);
  }
  return s + ")";
}

std::string arrows(const PartialOrientation& arrow) {
  std::vector<int> outs, ins;
  for (std::size_t h = 0; h < arrow.size(); ++h) {
    if (arrow[h] == Arrow::out) outs.push_back(static_cast<int>(h));
    if (arrow[h] == Arrow::in) ins.push_back(static_cast<int>(h));
  }
  return "; out=" + list(outs) + "; in=" + list(ins);
}

}  // namespace

std::string format_rotation(const RootedMap& map) {
  return "sigma=" + format_cycles(map.sigma()) + "; alpha=" + format_cycles(map.alpha()) +
         "; root=" + std::to_string(map.root());
}

std::string format_plane_map(const PlaneMap& m, const PartialOrientation& arrow) {
  return format_rotation(m.map()) + "; outer=" + std::to_string(m.outer()) + arrows(arrow);
}

std::string format_near_eulerian_tree(const NearEulerianTree& t) {
  return "sigma=" + format_cycles(t.sigma) + "; alpha=" + format_cycles(t.alpha) + "; root=" + std::to_string(t.root) +
         arrows(t.arrow);
}

std::string format_tree_rooted_map(const TreeRootedMap& t) {
  std::vector<int> labels;
  for (int l : t.vertex_label) labels.push_back(l + 1);
  std::vector<int> tree;
  for (int h = 0; h < t.map.half_edge_count(); ++h)
    if (t.in_tree[h] && h < t.map.alpha(h)) tree.push_back(h);
  return format_rotation(t.map) + "; labels=" + list(labels) + "; tree=" + list(tree);
}

}  // namespace unicell::cli
