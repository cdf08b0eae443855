#include "s3color/report.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

namespace s3color {

using nlohmann::ordered_json;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string entries_label(const std::vector<int>& entries) {
  std::string s = "C(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

ordered_json diagram_summary(const Diagram& d) {
  ordered_json j;
  j["arcs"] = d.num_arcs;
  j["crossings"] = d.crossings.size();
  j["loops"] = d.free_loops;
  return j;
}

}  // namespace

bool Report::pass() const {
  for (const CheckItem& it : items)
    if (!it.ok) return false;
  return true;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["pass"] = pass();
  j["elapsed_ms"] = elapsed_ms;
  ordered_json arr = ordered_json::array();
  for (const CheckItem& it : items) {
    ordered_json o;
    o["label"] = it.label;
    o["ok"] = it.ok;
    if (!it.detail.empty()) o["detail"] = it.detail;
    arr.push_back(o);
  }
  j["items"] = arr;
  j["payload"] = payload;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << text_body;
  for (const CheckItem& it : items) {
    out << (it.ok ? "[ ok ] " : "[FAIL] ") << it.label;
    if (!it.ok && !it.detail.empty()) out << "\n" << it.detail;
    out << "\n";
  }
  if (!items.empty())
    out << (pass() ? "PASS" : "FAIL") << " (" << items.size() << " checks)\n";
  return out.str();
}

ordered_json classification_json(const Classification& cl) {
  ordered_json j;
  j["n"] = cl.achievable_sizes();
  ordered_json counts = ordered_json::object();
  for (int n = 1; n <= 5; ++n) counts[std::to_string(n)] = cl.counts[n];
  j["counts"] = counts;
  return j;
}

std::string coloring_text(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i)
    out << "arc " << i << " " << to_string(c[i]) << "\n";
  return out.str();
}

Coloring parse_coloring_text(const std::string& text, int slots) {
  Coloring c(slots, S3::e);
  std::vector<bool> seen(slots, false);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& what) -> void {
      throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    if (tok != "arc") fail("expected 'arc <i> <element>', got '" + tok + "'");
    int idx;
    std::string elem;
    if (!(ls >> idx >> elem)) fail("expected 'arc <i> <element>'");
    if (idx < 0 || idx >= slots)
      fail("arc index " + std::to_string(idx) + " out of range");
    if (seen[idx]) fail("arc " + std::to_string(idx) + " colored twice");
    seen[idx] = true;
    try {
      c[idx] = parse_element(elem);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    std::string extra;
    if (ls >> extra) fail("unexpected trailing token '" + extra + "'");
  }
  for (int i = 0; i < slots; ++i)
    if (!seen[i])
      throw ParseError("arc " + std::to_string(i) + " has no color");
  return c;
}

Diagram load_input(const std::string& text) {
  // A diagram file's first meaningful token is "arcs"; anything else is
  // treated as family notation.
  std::istringstream in(text);
  std::string line, first;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    if (ls >> first) break;
  }
  if (first == "arcs") return parse_diagram(text);
  return make_diagram(parse_family(text));
}

Report classify_report(const Diagram& d) {
  Timer t;
  Report r;
  r.command = "classify";
  r.inputs = diagram_summary(d);
  Classification cl = classify(d);
  r.payload = classification_json(cl);

  std::ostringstream out;
  for (int n = 1; n <= 5; ++n) {
    if (cl.counts[n] == 0) continue;
    out << "colors " << n << ": " << cl.counts[n] << " colorings\n";
    for (std::size_t i = 0; i < cl.witness[n]->size(); ++i)
      out << "  arc " << i << " " << to_string((*cl.witness[n])[i]) << "\n";
  }
  out << "total " << cl.total << "\n";
  r.text_body = out.str();
  r.elapsed_ms = t.ms();
  return r;
}

Report det_report(const Diagram& d) {
  Timer t;
  Report r;
  r.command = "det";
  r.inputs = diagram_summary(d);
  long long det = determinant(d);
  r.payload["det"] = det;
  r.text_body = std::to_string(det) + "\n";
  r.elapsed_ms = t.ms();
  return r;
}

Report solve_report(const Diagram& d) {
  Timer t;
  Report r;
  r.command = "solve";
  r.inputs = diagram_summary(d);
  auto cols = enumerate_colorings(d);
  ordered_json arr = ordered_json::array();
  std::ostringstream out;
  for (const Coloring& c : cols) {
    ordered_json one = ordered_json::array();
    for (S3 x : c) one.push_back(to_string(x));
    arr.push_back(one);
    out << coloring_text(c) << "\n";
  }
  r.payload["total"] = cols.size();
  r.payload["colorings"] = arr;
  out << "total " << cols.size() << "\n";
  r.text_body = out.str();
  r.elapsed_ms = t.ms();
  return r;
}

Report gen_report(const std::string& family) {
  Timer t;
  Report r;
  r.command = "gen";
  FamilySpec spec = parse_family(family);
  Diagram d = make_diagram(spec);
  r.inputs["family"] = family;
  std::string text = emit_diagram(d);
  r.payload = diagram_summary(d);
  r.payload["diagram"] = text;
  r.text_body = text;
  r.elapsed_ms = t.ms();
  return r;
}

Report promote_report(const Diagram& d) {
  Timer t;
  Report r;
  r.command = "promote";
  r.inputs = diagram_summary(d);
  Classification cl = classify(d);
  if (!cl.witness[4]) {
    r.items.push_back({"input has a four-color coloring", false,
                       "no 4-coloring exists\n" + emit_diagram(d)});
    r.elapsed_ms = t.ms();
    return r;
  }
  r.items.push_back({"input has a four-color coloring", true, ""});
  PromotionResult pr = promote_to_five(d, *cl.witness[4]);
  bool valid = is_valid_coloring(pr.diagram, pr.coloring);
  bool five = palette_size(pr.coloring) == 5;
  r.items.push_back({"promoted coloring is valid", valid,
                     valid ? "" : emit_diagram(pr.diagram)});
  r.items.push_back({"promoted coloring uses five colors", five,
                     five ? "" : coloring_text(pr.coloring)});

  ordered_json steps = ordered_json::array();
  for (const MoveRecord& m : pr.steps) {
    ordered_json s;
    s["kind"] = m.kind == MoveRecord::Kind::R1 ? "r1" : "r2";
    s["moving"] = m.moving;
    s["over"] = m.over;
    s["new_color"] = to_string(m.new_color);
    steps.push_back(s);
  }
  r.payload["steps"] = steps;
  r.payload["diagram"] = emit_diagram(pr.diagram);
  ordered_json tokens = ordered_json::array();
  for (S3 x : pr.coloring) tokens.push_back(to_string(x));
  r.payload["coloring"] = tokens;
  r.text_body = emit_diagram(pr.diagram) + "\n" + coloring_text(pr.coloring);
  r.elapsed_ms = t.ms();
  return r;
}

Report verify_torus(int q_max) {
  if (q_max < 2) throw std::invalid_argument("q_max must be at least 2");
  Timer t;
  Report r;
  r.command = "verify-torus";
  r.inputs["q_max"] = q_max;
  ordered_json rows = ordered_json::array();
  for (int q = 2; q <= q_max; ++q) {
    Diagram d = torus2_diagram(q);
    Classification cl = classify(d);
    long long det = determinant(d);
    std::string tag = "T(2," + std::to_string(q) + ") ";
    std::string dump = emit_diagram(d);

    r.items.push_back({tag + "determinant equals q", det == q,
                       det == q ? "" : "got " + std::to_string(det) + "\n" +
                                           dump});
    bool four = cl.achievable(4) == (q % 4 == 0);
    r.items.push_back(
        {tag + "four-colorable exactly when q % 4 == 0", four,
         four ? "" : dump});
    bool three = cl.achievable(3) == (q % 3 == 0);
    r.items.push_back(
        {tag + "three-colorable exactly when det % 3 == 0", three,
         three ? "" : dump});

    bool promoted = false;
    if (cl.achievable(4)) {
      PromotionResult pr = promote_to_five(d, *cl.witness[4]);
      promoted = is_valid_coloring(pr.diagram, pr.coloring) &&
                 palette_size(pr.coloring) == 5;
      r.items.push_back({tag + "promotes to five colors", promoted,
                         promoted ? "" : dump});
    }
    ordered_json row;
    row["q"] = q;
    row["det"] = det;
    row["n"] = cl.achievable_sizes();
    row["promoted_to_five"] = promoted;
    rows.push_back(row);
  }
  r.payload["rows"] = rows;
  r.elapsed_ms = t.ms();
  return r;
}

Report verify_double_twist(int index_max) {
  if (index_max < 1) throw std::invalid_argument("index_max must be >= 1");
  Timer t;
  Report r;
  r.command = "verify-j";
  r.inputs["index_max"] = index_max;
  ordered_json rows = ordered_json::array();
  for (int k = 1; k <= index_max; k += 2)
    for (int l = 1; l <= index_max; l += 2) {
      Diagram d = double_twist_diagram(k, l);
      Classification cl = classify(d);
      long long det = determinant(d);
      int kl = k * l;
      std::string tag =
          "J(" + std::to_string(k) + "," + std::to_string(l) + ") ";
      std::string dump = emit_diagram(d);

      bool dd = det == 1 + kl;
      r.items.push_back({tag + "determinant equals 1 + kl", dd,
                         dd ? "" : "got " + std::to_string(det) + "\n" + dump});
      bool four = cl.achievable(4) == (kl % 4 == 3);
      r.items.push_back(
          {tag + "four-colorable exactly when kl % 4 == 3", four,
           four ? "" : dump});
      bool three = cl.achievable(3) == (kl % 3 == 2);
      r.items.push_back(
          {tag + "three-colorable exactly when kl % 3 == 2", three,
           three ? "" : dump});

      ordered_json row;
      row["k"] = k;
      row["l"] = l;
      row["det"] = det;
      row["n"] = cl.achievable_sizes();
      rows.push_back(row);
    }
  r.payload["rows"] = rows;
  r.elapsed_ms = t.ms();
  return r;
}

Report verify_conway(unsigned long long seed, int samples, int max_crossings) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (max_crossings < 2)
    throw std::invalid_argument("max_crossings must be >= 2");
  Timer t;
  Report r;
  r.command = "verify-conway";
  r.inputs["seed"] = seed;
  r.inputs["samples"] = samples;
  r.inputs["max_crossings"] = max_crossings;

  std::mt19937_64 rng(seed);
  int constructive_hits = 0, five_cases = 0;
  ordered_json rows = ordered_json::array();

  for (int s = 0; s < samples; ++s) {
    // Even-entry twist vectors 2a1, 2b1, ..., 2a_{m+1} with m <= 2 and
    // magnitudes |a_i|, |b_j| <= 3, resampled until under the crossing cap.
    int m;
    do {
      m = static_cast<int>(rng() % 3);
    } while (2 * (2 * m + 1) > max_crossings);
    int n = 2 * m + 1;
    std::vector<int> entries;
    int total;
    do {
      entries.clear();
      total = 0;
      for (int i = 0; i < n; ++i) {
        int mag = 1 + static_cast<int>(rng() % 3);
        int sgn = rng() % 2 ? 1 : -1;
        entries.push_back(2 * mag * sgn);
        total += 2 * mag;
      }
    } while (total > max_crossings);

    long long a_sum = 0;
    for (int i = 0; i < n; i += 2) a_sum += std::abs(entries[i]) / 2;
    bool want_success = a_sum % 2 == 0;

    ConwayConstruction cc = constructive_conway_coloring(entries);
    std::string dump = emit_diagram(cc.diagram);
    std::string why;

    if (cc.coloring.has_value() != want_success)
      why += "constructive coloring " +
             std::string(cc.coloring ? "succeeded" : "failed") +
             " but sum of |a_i| is " + std::to_string(a_sum) + "; ";
    if (cc.coloring) {
      ++constructive_hits;
      if (!is_valid_coloring(cc.diagram, *cc.coloring))
        why += "constructive coloring invalid; ";
      else if (palette_size(*cc.coloring) != 4)
        why += "constructive coloring uses " +
               std::to_string(palette_size(*cc.coloring)) + " colors; ";
    }

    Classification cl = classify(cc.diagram);
    if (cl.achievable(5)) {
      ++five_cases;
      if (!cl.achievable(4)) why += "five-colorable but not four-colorable; ";
    }

    Components comp = components(cc.diagram);
    if (comp.num_arc_components != 2 || comp.free_loops != 0) {
      why += "expected a 2-component diagram, got " +
             std::to_string(comp.total()) + "; ";
    } else {
      long long lk = linking_number(cc.diagram);
      if (((lk % 2) + 2) % 2 != a_sum % 2)
        why += "linking number " + std::to_string(lk) +
               " parity differs from sum of |a_i| = " + std::to_string(a_sum) +
               "; ";
    }

    bool ok = why.empty();
    r.items.push_back({entries_label(entries), ok, ok ? "" : why + "\n" + dump});

    ordered_json row;
    row["entries"] = entries;
    row["a_sum"] = a_sum;
    row["constructive"] = cc.coloring.has_value();
    row["n"] = cl.achievable_sizes();
    rows.push_back(row);
  }
  r.payload["rows"] = rows;
  r.payload["constructive_successes"] = constructive_hits;
  r.payload["five_colorable_samples"] = five_cases;
  r.elapsed_ms = t.ms();
  return r;
}

}  // namespace s3color
