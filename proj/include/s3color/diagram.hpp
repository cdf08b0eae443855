#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "s3color/group.hpp"

namespace s3color {

using ArcId = std::int32_t;

// One crossing of an oriented link diagram.  The under-strand enters on arc
// under_in and leaves on arc under_out; the arc passing over is over.  sign
// selects which conjugation relation applies at the crossing:
//   +1 : color(under_out) = x * color(under_in) * x^-1
//   -1 : color(under_out) = x^-1 * color(under_in) * x
// with x = color(over).
struct Crossing {
  int sign = +1;
  ArcId over = -1;
  ArcId under_in = -1;
  ArcId under_out = -1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Arcs 0..num_arcs-1 are the crossing-terminated arcs; in a well-formed
// diagram each appears exactly once as under_in and once as under_out, so
// num_arcs always equals crossings.size().  Circle components with no
// crossings are only counted (free_loops); when a diagram is colored they
// occupy the trailing color slots [num_arcs, num_arcs + free_loops).
struct Diagram {
  int num_arcs = 0;
  std::vector<Crossing> crossings;
  int free_loops = 0;

  int color_slots() const { return num_arcs + free_loops; }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Returns a list of violations (empty means the diagram is well-formed).
std::vector<std::string> validate(const Diagram& d);

// Partition of arcs into link components, via orbits of the permutation
// under_in -> under_out.  Component ids are assigned in order of each
// component's smallest arc; free loops follow as their own components.
struct Components {
  std::vector<int> arc_component;  // size num_arcs
  int num_arc_components = 0;
  int free_loops = 0;

  int total() const { return num_arc_components + free_loops; }
};
Components components(const Diagram& d);  // throws if validate() fails

// Color of the outgoing under-arc given the over color x and incoming under
// color y.  Throws std::invalid_argument on identity inputs or sign not in
// {-1, +1}.
S3 under_color(int sign, S3 x, S3 y);

// Half the signed count of crossings between the two components; requires
// exactly 2 arc components (free loops are ignored).
long long linking_number(const Diagram& d);

}  // namespace s3color
