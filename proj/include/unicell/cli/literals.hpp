#pragma once

#include "unicell/bijections.hpp"
#include "unicell/maps.hpp"
#include "unicell/planar_closure.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unicell::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// n=<int>; pairs=(a b, c d!, ...); colors=(c ...); q=<int>
// A trailing `!` twists the pair. Colors are 1-based and indexed by vertex
// class in order of smallest corner; without colors every vertex gets color 1.
ColoredUnicellularMap parse_gluing(std::string_view text);
std::string format_gluing(const ColoredUnicellularMap& u);

// sigma=(cycles); alpha=(cycles); root=<int>; outer=<int>; out=(h ...);
// in=(h ...); labels=(l ...); tree=(h ...)
// Half-edges missing from alpha are buds. labels are 1-based per vertex in
// order of smallest half-edge.
struct RotationLiteral {
  std::vector<int> sigma;
  std::vector<int> alpha;
  int root = 0;
  std::optional<int> outer;
  PartialOrientation arrow;
  std::vector<int> labels;
  std::vector<char> tree;
};

RotationLiteral parse_rotation(std::string_view text);

RootedMap to_rooted_map(const RotationLiteral& r);
PlaneMap to_plane_map(const RotationLiteral& r);
NearEulerianTree to_near_eulerian_tree(const RotationLiteral& r);
TreeRootedMap to_tree_rooted_map(const RotationLiteral& r);

std::string format_cycles(const std::vector<int>& perm);
std::string format_rotation(const RootedMap& map);
std::string format_plane_map(const PlaneMap& m, const PartialOrientation& arrow);
std::string format_near_eulerian_tree(const NearEulerianTree& t);
std::string format_tree_rooted_map(const TreeRootedMap& t);

}  // namespace unicell::cli
