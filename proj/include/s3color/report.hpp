#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "s3color/diagram.hpp"
#include "s3color/moves.hpp"
#include "s3color/notation.hpp"
#include "s3color/solver.hpp"

namespace s3color {

// One named check inside a report.
struct CheckItem {
  std::string label;
  bool ok = true;
  std::string detail;  // context; on failure includes the offending diagram
};

struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<CheckItem> items;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::string text_body;  // command-specific text output
  double elapsed_ms = 0;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// {"n": [sizes...], "counts": {"1": c1, ..., "5": c5}}
nlohmann::ordered_json classification_json(const Classification& cl);

// One "arc <i> <token>" line per color slot (free-loop slots continue the
// arc numbering).
std::string coloring_text(const Coloring& c);
Coloring parse_coloring_text(const std::string& text, int slots);

// Accepts either family notation (C/J/T) or a diagram file's contents.
Diagram load_input(const std::string& text);

Report classify_report(const Diagram& d);
Report det_report(const Diagram& d);
Report solve_report(const Diagram& d);
Report gen_report(const std::string& family);
Report promote_report(const Diagram& d);

// Family sweeps; every assertion is a CheckItem, pass() is the verdict.
Report verify_torus(int q_max);
Report verify_double_twist(int index_max);
Report verify_conway(unsigned long long seed, int samples, int max_crossings);

}  // namespace s3color
