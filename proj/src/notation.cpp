#include "s3color/notation.hpp"

#include <cctype>
#include <sstream>

namespace s3color {

namespace {

// ---------------------------------------------------------------------------
// Plat construction.
//
// Crossings are built box by box.  Ports of a crossing, box-local:
//   horizontal box: 0 west-upper, 1 west-lower, 2 east-upper, 3 east-lower
//   vertical box:   0 north-left, 1 north-right, 2 south-left, 3 south-right
// In both layouts the two strands inside a crossing join ports 0<->3 and
// 1<->2, consecutive crossings of a box are wired 2->0 and 3->1, and a box is
// entered at ports 0,1 of its first crossing and left at ports 2,3 of its
// last one.  For a positive entry the strand through ports {1,2} passes over
// at every crossing of the box; negative entries flip that.

struct PortRef {
  int c = -1;
  int p = -1;
};

struct Builder {
  std::vector<int> sign;     // per crossing
  std::vector<bool> over_b;  // per crossing: strand {1,2} is the over strand
  std::vector<std::array<PortRef, 4>> peer;

  void connect(PortRef a, PortRef b) {
    peer[a.c][a.p] = b;
    peer[b.c][b.p] = a;
  }

  // |entry| crossings wired in sequence; returns (first, last) indices.
  std::pair<int, int> make_box(int entry) {
    int n = std::abs(entry);
    int first = static_cast<int>(sign.size());
    for (int j = 0; j < n; ++j) {
      sign.push_back(entry > 0 ? +1 : -1);
      over_b.push_back(entry > 0);
      peer.push_back({});
      if (j > 0) {
        connect({first + j - 1, 2}, {first + j, 0});
        connect({first + j - 1, 3}, {first + j, 1});
      }
    }
    return {first, first + n - 1};
  }
};

}  // namespace

PlatBuild build_plat(const std::vector<int>& entries) {
  if (entries.empty())
    throw std::invalid_argument("plat entry list is empty");
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] == 0)
      throw std::invalid_argument("plat entry " + std::to_string(i + 1) +
                                  " is zero");

  Builder b;
  int n = static_cast<int>(entries.size());

  // Inside-out: horizontal block for the last entry, then alternately a
  // vertical block below and a horizontal block to the right.
  auto [f0, l0] = b.make_box(entries[n - 1]);
  PortRef nw{f0, 0}, sw{f0, 1}, ne{l0, 2}, se{l0, 3};
  bool vertical = true;
  for (int k = n - 2; k >= 0; --k) {
    auto [f, l] = b.make_box(entries[k]);
    if (vertical) {
      b.connect(sw, {f, 0});
      b.connect(se, {f, 1});
      sw = {l, 2};
      se = {l, 3};
    } else {
      b.connect(ne, {f, 0});
      b.connect(se, {f, 1});
      ne = {l, 2};
      se = {l, 3};
    }
    vertical = !vertical;
  }
  if (n % 2 == 1) {  // close across the top and the bottom
    b.connect(nw, ne);
    b.connect(sw, se);
  } else {  // close around the left and the right
    b.connect(nw, sw);
    b.connect(ne, se);
  }

  // Walk the closed strands.  A directed passage is (crossing, entry port);
  // the strand leaves at the partner port 3-p and continues through the
  // segment wiring.  Scanning entry-port ids in increasing order fixes both
  // the component order and each component's traversal direction.
  int C = static_cast<int>(b.sign.size());
  PlatBuild out;
  Diagram& d = out.diagram;
  d.crossings.assign(C, Crossing{});
  std::vector<bool> seen(4 * C, false);

  int next_arc = 0;
  for (int s0 = 0; s0 < 4 * C; ++s0) {
    if (seen[s0]) continue;
    std::vector<PortRef> walk;  // entry ports, in traversal order
    PortRef at{s0 / 4, s0 % 4};
    do {
      seen[at.c * 4 + at.p] = true;
      seen[at.c * 4 + (3 - at.p)] = true;  // reverse-direction passage
      walk.push_back(at);
      at = b.peer[at.c][3 - at.p];
    } while (!(at.c == s0 / 4 && at.p == s0 % 4));

    int unders = 0;
    for (const PortRef& pr : walk) {
      bool strand_b = pr.p == 1 || pr.p == 2;
      if (b.over_b[pr.c] != strand_b) ++unders;
    }
    if (unders == 0)
      throw std::invalid_argument(
          "plat entries produce a component that never passes under a "
          "crossing; such a diagram has no arc presentation");

    int base = next_arc;
    next_arc += unders;
    ArcId current = base + unders - 1;  // arc active at the walk's start
    int started = 0;
    for (const PortRef& pr : walk) {
      bool strand_b = pr.p == 1 || pr.p == 2;
      bool over = b.over_b[pr.c] == strand_b;
      ArcId entry_arc = current;
      if (over) {
        d.crossings[pr.c].over = current;
      } else {
        d.crossings[pr.c].under_in = current;
        current = base + started++;
        d.crossings[pr.c].under_out = current;
      }
      if (pr.c == 0) {  // remember the arcs on the west side of crossing 0
        if (pr.p == 0) out.left_upper_arc = entry_arc;
        if (pr.p == 3) out.left_upper_arc = current;
        if (pr.p == 1) out.left_lower_arc = entry_arc;
        if (pr.p == 2) out.left_lower_arc = current;
      }
    }
  }
  d.num_arcs = next_arc;
  for (int c = 0; c < C; ++c) d.crossings[c].sign = b.sign[c];

  if (auto bad = validate(d); !bad.empty())
    throw std::logic_error("plat builder produced an invalid diagram: " +
                           bad.front());
  return out;
}

Diagram plat_diagram(const std::vector<int>& entries) {
  return build_plat(entries).diagram;
}

Diagram double_twist_diagram(int k, int l) {
  if (k == 0 || l == 0)
    throw std::invalid_argument("double twist indices must be nonzero");
  return plat_diagram({k, l});
}

Diagram torus2_diagram(int q) {
  if (q == 0) throw std::invalid_argument("torus index q must be nonzero");
  return plat_diagram({q});
}

Diagram make_diagram(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Plat:
      return plat_diagram(spec.entries);
    case FamilySpec::Kind::DoubleTwist:
      return double_twist_diagram(spec.entries[0], spec.entries[1]);
    default:
      return torus2_diagram(spec.entries[1]);
  }
}

// ---------------------------------------------------------------------------
// Family notation parser.

namespace {

struct Scanner {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i + 1));
  }
  char peek() const { return i < s.size() ? s[i] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  int integer() {
    std::size_t start = i;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = s[i] == '-';
      ++i;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) {
        i = start;
        fail("entry out of range");
      }
      ++i;
    }
    return static_cast<int>(neg ? -v : v);
  }
};

}  // namespace

FamilySpec parse_family(std::string_view text) {
  Scanner sc{text};
  sc.skip_ws();
  char name = sc.peek();
  if (name != 'C' && name != 'J' && name != 'T')
    sc.fail("expected family name C, J, or T");
  ++sc.i;

  FamilySpec spec;
  spec.kind = name == 'C'   ? FamilySpec::Kind::Plat
              : name == 'J' ? FamilySpec::Kind::DoubleTwist
                            : FamilySpec::Kind::Torus2;

  sc.skip_ws();
  sc.expect('(');
  std::vector<std::size_t> entry_pos;
  while (true) {
    sc.skip_ws();
    entry_pos.push_back(sc.i + 1);
    spec.entries.push_back(sc.integer());
    sc.skip_ws();
    if (sc.peek() == ',') {
      ++sc.i;
      continue;
    }
    sc.expect(')');
    break;
  }
  sc.skip_ws();
  if (sc.i != text.size()) sc.fail("unexpected trailing characters");

  auto entry_fail = [&](std::size_t k, const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(entry_pos[k]));
  };
  switch (spec.kind) {
    case FamilySpec::Kind::Plat:
      for (std::size_t k = 0; k < spec.entries.size(); ++k)
        if (spec.entries[k] == 0) entry_fail(k, "zero twist entry");
      break;
    case FamilySpec::Kind::DoubleTwist:
      if (spec.entries.size() != 2)
        throw ParseError("J takes exactly two entries");
      for (std::size_t k = 0; k < 2; ++k)
        if (spec.entries[k] == 0) entry_fail(k, "zero twist entry");
      break;
    case FamilySpec::Kind::Torus2:
      if (spec.entries.size() != 2)
        throw ParseError("torus notation takes exactly two entries");
      if (spec.entries[0] != 2)
        entry_fail(0, "torus notation must be T(2,q)");
      if (spec.entries[1] == 0) entry_fail(1, "zero torus index");
      break;
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Diagram text format.

Diagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Diagram d;
  bool have_arcs = false;
  bool have_loops = false;

  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank or comment-only

    if (tok == "arcs") {
      if (have_arcs) fail("duplicate arcs line");
      if (!(ls >> d.num_arcs) || d.num_arcs < 0) fail("bad arc count");
      have_arcs = true;
    } else if (tok == "loops") {
      if (!have_arcs) fail("loops before arcs");
      if (have_loops || !d.crossings.empty()) fail("misplaced loops line");
      if (!(ls >> d.free_loops) || d.free_loops < 0) fail("bad loop count");
      have_loops = true;
    } else if (tok == "x") {
      if (!have_arcs) fail("crossing before arcs line");
      Crossing c;
      std::string sgn;
      if (!(ls >> sgn >> c.over >> c.under_in >> c.under_out))
        fail("expected 'x <+|-> <over> <under_in> <under_out>'");
      if (sgn == "+")
        c.sign = +1;
      else if (sgn == "-")
        c.sign = -1;
      else
        fail("bad crossing sign '" + sgn + "'");
      d.crossings.push_back(c);
    } else {
      fail("unrecognized token '" + tok + "'");
    }
    std::string extra;
    if (ls >> extra) fail("unexpected trailing token '" + extra + "'");
  }
  if (!have_arcs) throw ParseError("missing arcs line");

  if (auto bad = validate(d); !bad.empty()) {
    std::string msg = "invalid diagram:";
    for (const std::string& m : bad) msg += " " + m + ";";
    throw ParseError(msg);
  }
  return d;
}

std::string emit_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "arcs " << d.num_arcs << "\n";
  if (d.free_loops > 0) out << "loops " << d.free_loops << "\n";
  for (const Crossing& c : d.crossings)
    out << "x " << (c.sign > 0 ? '+' : '-') << ' ' << c.over << ' '
        << c.under_in << ' ' << c.under_out << "\n";
  return out.str();
}

}  // namespace s3color
