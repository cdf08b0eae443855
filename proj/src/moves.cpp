#include "s3color/moves.hpp"

#include <algorithm>
#include <stdexcept>

namespace s3color {

namespace {

// Index of the crossing where `arc` ends by passing under.
int terminal_crossing(const Diagram& d, ArcId arc) {
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    if (d.crossings[i].under_in == arc) return static_cast<int>(i);
  throw std::logic_error("arc has no terminal undercrossing");
}

void check_arc(const Diagram& d, const Coloring& c, ArcId a,
               const char* role) {
  if (static_cast<int>(c.size()) != d.color_slots())
    throw std::invalid_argument("coloring size does not match the diagram");
  if (a < 0 || a >= d.num_arcs)
    throw std::invalid_argument(std::string(role) + " arc out of range");
}

}  // namespace

MoveResult r1_insert(const Diagram& d, const Coloring& c, ArcId arc,
                     int sign) {
  check_arc(d, c, arc, "kinked");
  if (sign != +1 && sign != -1)
    throw std::invalid_argument("crossing sign must be +1 or -1");

  MoveResult out{d, c, {MoveRecord::Kind::R1, arc, -1, S3::e}};
  Diagram& nd = out.diagram;
  ArcId fresh = nd.num_arcs++;
  out.record.over = fresh;

  // The tail of `arc` now ends at the kink; the kink's outgoing arc runs into
  // the old terminal undercrossing.  The strand crosses itself, so the new
  // crossing's over arc is the fresh arc.
  int t = terminal_crossing(nd, arc);
  nd.crossings[t].under_in = fresh;
  nd.crossings.push_back({sign, fresh, arc, fresh});

  out.record.new_color = c[arc];  // conjugation by itself fixes the color
  out.coloring.insert(out.coloring.begin() + (nd.num_arcs - 1), c[arc]);
  return out;
}

MoveResult r2_insert(const Diagram& d, const Coloring& c, ArcId moving,
                     ArcId over) {
  check_arc(d, c, moving, "moving");
  check_arc(d, c, over, "over");
  if (moving == over)
    throw std::invalid_argument("moving and over arcs must differ");

  MoveResult out{d, c, {MoveRecord::Kind::R2, moving, over, S3::e}};
  Diagram& nd = out.diagram;
  ArcId mid = nd.num_arcs;
  ArcId tail = nd.num_arcs + 1;
  nd.num_arcs += 2;

  // Push the end of `moving` under `over` and straight back out: a positive
  // then a negative crossing sharing the same over arc.
  int t = terminal_crossing(nd, moving);
  nd.crossings[t].under_in = tail;
  nd.crossings.push_back({+1, over, moving, mid});
  nd.crossings.push_back({-1, over, mid, tail});

  S3 mid_color = under_color(+1, c[over], c[moving]);
  out.record.new_color = mid_color;
  out.coloring.insert(out.coloring.begin() + mid, mid_color);
  out.coloring.insert(out.coloring.begin() + tail, c[moving]);
  return out;
}

PromotionResult promote_to_five(const Diagram& d, const Coloring& c) {
  if (!is_valid_coloring(d, c))
    throw std::invalid_argument("promotion needs a valid coloring");
  if (palette_size(c) != 4)
    throw std::invalid_argument("promotion starts from exactly four colors");

  PromotionResult out{d, c, {}};
  while (palette_size(out.coloring) < 5) {
    if (out.steps.size() > 4)
      throw std::logic_error("promotion failed to terminate");

    bool used[6] = {};
    for (S3 x : out.coloring) used[static_cast<int>(x)] = true;
    S3 missing = S3::e;
    for (S3 x : kColors)
      if (!used[static_cast<int>(x)]) missing = x;

    // Slide a suitably colored arc under one of the opposite conjugacy class
    // so the middle arc of the slide wears the missing color.
    bool done = false;
    for (ArcId m = 0; m < out.diagram.num_arcs && !done; ++m)
      for (ArcId o = 0; o < out.diagram.num_arcs && !done; ++o) {
        if (m == o) continue;
        if (class_of(out.coloring[m]) == class_of(out.coloring[o])) continue;
        if (conjugate(out.coloring[o], out.coloring[m]) != missing) continue;
        MoveResult step = r2_insert(out.diagram, out.coloring, m, o);
        out.diagram = std::move(step.diagram);
        out.coloring = std::move(step.coloring);
        out.steps.push_back(step.record);
        done = true;
      }
    if (!done)
      throw std::logic_error("no slide can introduce the missing color");
  }
  if (!is_valid_coloring(out.diagram, out.coloring))
    throw std::logic_error("promotion produced an invalid coloring");
  return out;
}

}  // namespace s3color
