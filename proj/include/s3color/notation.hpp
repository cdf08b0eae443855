#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "s3color/diagram.hpp"

namespace s3color {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two-bridge family notation:
//   C(c1,...,cn)  plat with the given twist-box entries (nonzero integers)
//   J(k,l)        double twist link, same diagram as C(k,l)
//   T(2,q)        torus link on two strands, same diagram as C(q)
struct FamilySpec {
  enum class Kind { Plat, DoubleTwist, Torus2 };
  Kind kind = Kind::Plat;
  std::vector<int> entries;  // Plat: c1..cn; DoubleTwist: {k,l}; Torus2: {q}

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec parse_family(std::string_view text);  // throws ParseError

// Standard alternating-form diagram for C(c1,...,cn): twist boxes are laid
// out inside-out starting from a horizontal block for cn, alternating
// vertical and horizontal blocks back to c1, closed across the top/bottom
// (odd n) or around the left/right (even n).  Entry signs pick the crossing
// handedness of a whole box.  Arc and crossing numbering is deterministic.
Diagram plat_diagram(const std::vector<int>& entries);

// Same build, also reporting the two arcs on the west side of the first
// crossing (used to seed the constructive coloring).
struct PlatBuild {
  Diagram diagram;
  ArcId left_upper_arc = -1;
  ArcId left_lower_arc = -1;
};
PlatBuild build_plat(const std::vector<int>& entries);

Diagram double_twist_diagram(int k, int l);  // == plat_diagram({k, l})
Diagram torus2_diagram(int q);               // == plat_diagram({q})
Diagram make_diagram(const FamilySpec& spec);

// Diagram text format:
//   arcs <N>
//   loops <F>            (optional, omitted when 0)
//   x <+|-> <over> <under_in> <under_out>      (one line per crossing)
// '#' starts a comment; blank lines are ignored.  parse_diagram also runs
// validate() and throws on violations.
Diagram parse_diagram(const std::string& text);
std::string emit_diagram(const Diagram& d);

}  // namespace s3color
