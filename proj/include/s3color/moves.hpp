#pragma once

#include <vector>

#include "s3color/diagram.hpp"
#include "s3color/solver.hpp"

namespace s3color {

// One elementary insertion, for reporting.
struct MoveRecord {
  enum class Kind { R1, R2 } kind;
  ArcId moving = -1;     // arc that was kinked (R1) or slid (R2)
  ArcId over = -1;       // over arc for R2; the new arc itself for R1
  S3 new_color = S3::e;  // color of the middle arc created by the move
};

// Diagram plus transported coloring after an insertion.
struct MoveResult {
  Diagram diagram;
  Coloring coloring;
  MoveRecord record;
};

// Kink the end of `arc` just before its terminal undercrossing: one new
// crossing of the given sign where the arc crosses itself.  The transported
// coloring gives the new arc the color of `arc`.
MoveResult r1_insert(const Diagram& d, const Coloring& c, ArcId arc, int sign);

// Slide the end of `moving` under and back out from `over` just before the
// terminal undercrossing of `moving`: two new crossings of opposite sign with
// the same over arc.  Two new arcs appear; the middle one picks up the
// conjugated color, the far one returns to the color of `moving`.
MoveResult r2_insert(const Diagram& d, const Coloring& c, ArcId moving,
                     ArcId over);

// Repeatedly apply r2_insert to grow a 4-color coloring into a 5-color one on
// an enlarged diagram.  Requires palette_size(c) == 4.
struct PromotionResult {
  Diagram diagram;
  Coloring coloring;
  std::vector<MoveRecord> steps;
};
PromotionResult promote_to_five(const Diagram& d, const Coloring& c);

}  // namespace s3color
