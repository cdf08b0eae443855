#include "s3color/diagram.hpp"

#include <stdexcept>

namespace s3color {

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> bad;
  if (d.num_arcs < 0) bad.push_back("num_arcs is negative");
  if (d.free_loops < 0) bad.push_back("free_loops is negative");
  if (d.num_arcs != static_cast<int>(d.crossings.size()))
    bad.push_back("num_arcs " + std::to_string(d.num_arcs) +
                  " != crossing count " + std::to_string(d.crossings.size()));

  auto in_range = [&](ArcId a) { return a >= 0 && a < d.num_arcs; };
  std::vector<int> as_in(std::max(d.num_arcs, 0), 0);
  std::vector<int> as_out(std::max(d.num_arcs, 0), 0);
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& c = d.crossings[i];
    std::string where = "crossing " + std::to_string(i) + ": ";
    if (c.sign != +1 && c.sign != -1)
      bad.push_back(where + "sign " + std::to_string(c.sign));
    for (auto [role, arc] : {std::pair{"over", c.over},
                             std::pair{"under_in", c.under_in},
                             std::pair{"under_out", c.under_out}}) {
      if (!in_range(arc)) {
        bad.push_back(where + std::string(role) + " arc " +
                      std::to_string(arc) + " out of range");
      }
    }
    if (in_range(c.under_in)) as_in[c.under_in]++;
    if (in_range(c.under_out)) as_out[c.under_out]++;
  }
  for (ArcId a = 0; a < d.num_arcs; ++a) {
    if (as_in[a] != 1)
      bad.push_back("arc " + std::to_string(a) + " appears " +
                    std::to_string(as_in[a]) + " times as under_in");
    if (as_out[a] != 1)
      bad.push_back("arc " + std::to_string(a) + " appears " +
                    std::to_string(as_out[a]) + " times as under_out");
  }
  return bad;
}

Components components(const Diagram& d) {
  if (auto bad = validate(d); !bad.empty())
    throw std::invalid_argument("components: invalid diagram: " + bad.front());

  // successor permutation: the arc continuing after an arc dives under
  std::vector<ArcId> next(d.num_arcs, -1);
  for (const Crossing& c : d.crossings) next[c.under_in] = c.under_out;

  Components out;
  out.arc_component.assign(d.num_arcs, -1);
  out.free_loops = d.free_loops;
  for (ArcId a = 0; a < d.num_arcs; ++a) {
    if (out.arc_component[a] != -1) continue;
    int id = out.num_arc_components++;
    for (ArcId b = a; out.arc_component[b] == -1; b = next[b])
      out.arc_component[b] = id;
  }
  return out;
}

S3 under_color(int sign, S3 x, S3 y) {
  if (x == S3::e || y == S3::e)
    throw std::invalid_argument("under_color: identity is not an arc color");
  if (sign == +1) return conjugate(x, y);
  if (sign == -1) return conjugate(inverse(x), y);
  throw std::invalid_argument("under_color: sign must be +1 or -1");
}

long long linking_number(const Diagram& d) {
  Components comp = components(d);
  if (comp.num_arc_components != 2)
    throw std::invalid_argument(
        "linking_number needs exactly 2 arc components, got " +
        std::to_string(comp.num_arc_components));
  long long sum = 0;
  for (const Crossing& c : d.crossings)
    if (comp.arc_component[c.over] != comp.arc_component[c.under_in])
      sum += c.sign;
  if (sum % 2 != 0)
    throw std::logic_error("linking_number: odd signed crossing sum");
  return sum / 2;
}

}  // namespace s3color
