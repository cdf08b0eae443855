#include "s3color/solver.hpp"

#include "s3color/notation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace s3color {

bool is_valid_coloring(const Diagram& d, const Coloring& c) {
  if (static_cast<int>(c.size()) != d.color_slots())
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) +
                                " entries, diagram has " +
                                std::to_string(d.color_slots()) +
                                " color slots");
  for (S3 x : c)
    if (x == S3::e) return false;
  for (const Crossing& cr : d.crossings)
    if (under_color(cr.sign, c[cr.over], c[cr.under_in]) != c[cr.under_out])
      return false;
  return true;
}

int palette_size(const Coloring& c) {
  bool used[6] = {};
  for (S3 x : c) used[static_cast<int>(x)] = true;
  int n = 0;
  for (int i = 1; i < 6; ++i) n += used[i];
  return n;
}

std::vector<int> Classification::achievable_sizes() const {
  std::vector<int> out;
  for (int n = 1; n <= 5; ++n)
    if (counts[n] > 0) out.push_back(n);
  return out;
}

namespace {

// Backtracking enumerator.  Assigns the lowest-indexed unassigned slot and
// propagates: a crossing with its over arc and one under arc known forces the
// other under arc.
struct Enumerator {
  const Diagram& d;
  int slots;
  std::vector<S3> val;
  std::vector<bool> set;
  std::vector<std::vector<int>> touching;  // arc -> crossing indices
  std::vector<Coloring>& out;

  Enumerator(const Diagram& d_, std::vector<Coloring>& out_)
      : d(d_), slots(d_.color_slots()), val(slots, S3::e), set(slots, false),
        touching(slots), out(out_) {
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
      const Crossing& cr = d.crossings[i];
      for (ArcId a : {cr.over, cr.under_in, cr.under_out})
        touching[a].push_back(i);
    }
    for (auto& v : touching) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  // Returns false on contradiction; records assignments in trail.
  bool assign(int slot, S3 x, std::vector<int>& trail) {
    if (set[slot]) return val[slot] == x;
    val[slot] = x;
    set[slot] = true;
    trail.push_back(slot);
    std::deque<int> work(touching[slot].begin(), touching[slot].end());
    while (!work.empty()) {
      const Crossing& cr = d.crossings[work.front()];
      work.pop_front();
      if (!set[cr.over]) {
        // conjugation preserves the class, so the two under arcs of any
        // crossing must agree on it even before the over arc is known
        if (set[cr.under_in] && set[cr.under_out] &&
            class_of(val[cr.under_in]) != class_of(val[cr.under_out]))
          return false;
        continue;
      }
      bool in = set[cr.under_in], ou = set[cr.under_out];
      if (in && ou) {
        if (under_color(cr.sign, val[cr.over], val[cr.under_in]) !=
            val[cr.under_out])
          return false;
      } else if (in) {
        S3 forced = under_color(cr.sign, val[cr.over], val[cr.under_in]);
        if (!assign(cr.under_out, forced, trail)) return false;
      } else if (ou) {
        // invert the relation: in = under_color(-sign, over, out)
        S3 forced = under_color(-cr.sign, val[cr.over], val[cr.under_out]);
        if (!assign(cr.under_in, forced, trail)) return false;
      }
    }
    return true;
  }

  void run(int from) {
    while (from < slots && set[from]) ++from;
    if (from == slots) {
      out.push_back(val);
      return;
    }
    for (S3 x : kColors) {
      std::vector<int> trail;
      if (assign(from, x, trail)) run(from + 1);
      for (int s : trail) set[s] = false;
    }
  }
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram& d) {
  if (auto bad = validate(d); !bad.empty())
    throw std::invalid_argument("invalid diagram: " + bad.front());
  std::vector<Coloring> out;
  Enumerator e(d, out);
  e.run(0);
  std::sort(out.begin(), out.end());
  return out;
}

Classification classify(const Diagram& d) {
  Classification cl;
  for (const Coloring& c : enumerate_colorings(d)) {
    int n = palette_size(c);
    ++cl.counts[n];
    ++cl.total;
    if (!cl.witness[n]) cl.witness[n] = c;
  }
  return cl;
}

std::vector<S3Class> component_class_profile(const Diagram& d,
                                             const Coloring& c) {
  if (!is_valid_coloring(d, c))
    throw std::invalid_argument("not a valid coloring of the diagram");
  Components comp = components(d);
  std::vector<std::optional<S3Class>> cls(comp.total());
  for (int a = 0; a < d.num_arcs; ++a) {
    S3Class k = class_of(c[a]);
    auto& slot = cls[comp.arc_component[a]];
    if (slot && *slot != k)
      throw std::logic_error("component colored across conjugacy classes");
    slot = k;
  }
  for (int l = 0; l < comp.free_loops; ++l)
    cls[comp.num_arc_components + l] = class_of(c[d.num_arcs + l]);
  std::vector<S3Class> out;
  out.reserve(cls.size());
  for (auto& s : cls) out.push_back(*s);
  return out;
}

ConwayConstruction constructive_conway_coloring(
    const std::vector<int>& entries) {
  for (int e : entries)
    if (e == 0 || e % 2 != 0)
      throw std::invalid_argument(
          "constructive coloring needs all twist entries even and nonzero");
  PlatBuild pb = build_plat(entries);
  ConwayConstruction out{pb.diagram, std::nullopt};
  const Diagram& d = out.diagram;

  std::vector<S3> val(d.color_slots(), S3::e);
  std::vector<bool> set(d.color_slots(), false);
  val[pb.left_upper_arc] = S3::s;
  set[pb.left_upper_arc] = true;
  val[pb.left_lower_arc] = S3::st;
  set[pb.left_lower_arc] = true;
  if (pb.left_upper_arc == pb.left_lower_arc) return out;  // seed clash

  // Worklist propagation over crossings until stable.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Crossing& cr : d.crossings) {
      if (!set[cr.over]) continue;
      bool in = set[cr.under_in], ou = set[cr.under_out];
      if (in && !ou) {
        val[cr.under_out] = under_color(cr.sign, val[cr.over], val[cr.under_in]);
        set[cr.under_out] = true;
        progress = true;
      } else if (ou && !in) {
        val[cr.under_in] = under_color(-cr.sign, val[cr.over], val[cr.under_out]);
        set[cr.under_in] = true;
        progress = true;
      } else if (in && ou) {
        if (under_color(cr.sign, val[cr.over], val[cr.under_in]) !=
            val[cr.under_out])
          return out;  // contradiction: seeds do not extend
      }
    }
  }
  for (bool s : set)
    if (!s)
      throw std::logic_error(
          "propagation stalled: seed arcs do not reach every arc");
  if (!is_valid_coloring(d, val))
    throw std::logic_error("propagation produced an inconsistent coloring");
  out.coloring = std::move(val);
  return out;
}

// ---------------------------------------------------------------------------
// Fox colorings and the determinant.

namespace {

// Crossing/arc matrix: row per crossing with +2 at the over arc and -1 at
// each under arc, entries summed when arcs coincide.
std::vector<std::vector<long long>> relation_matrix(const Diagram& d) {
  int n = d.num_arcs;
  std::vector<std::vector<long long>> m(d.crossings.size(),
                                        std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& cr = d.crossings[i];
    m[i][cr.over] += 2;
    m[i][cr.under_in] -= 1;
    m[i][cr.under_out] -= 1;
  }
  return m;
}

}  // namespace

long long fox_coloring_count(const Diagram& d, int p) {
  if (auto bad = validate(d); !bad.empty())
    throw std::invalid_argument("invalid diagram: " + bad.front());
  if (d.free_loops > 0)
    throw std::invalid_argument("Fox colorings are not defined here for "
                                "diagrams with free loops");
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  if (d.num_arcs == 0) return 1;

  auto m = relation_matrix(d);
  int rows = static_cast<int>(m.size()), cols = d.num_arcs;
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    // modular inverse by Fermat (p prime)
    long long inv = 1, base = m[rank][col] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& v : m[rank]) v = v * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      long long f = m[r][col];
      for (int cc = 0; cc < cols; ++cc)
        m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  long long count = 1;
  for (int i = 0; i < cols - rank; ++i) count *= p;
  return count;
}

long long determinant(const Diagram& d) {
  if (auto bad = validate(d); !bad.empty())
    throw std::invalid_argument("invalid diagram: " + bad.front());
  if (d.free_loops > 0)
    throw std::invalid_argument("determinant is not defined here for "
                                "diagrams with free loops");
  int n = d.num_arcs;
  if (n <= 1) return 1;  // empty minor

  auto full = relation_matrix(d);
  // Drop the last row and column; the result is independent of the choice.
  int m = n - 1;
  std::vector<std::vector<long long>> a(m, std::vector<long long>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = full[i][j];

  // Bareiss fraction-free elimination.
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < m; ++r)
        if (a[r][k] != 0) { piv = r; break; }
      if (piv < 0) return 0;  // singular: split diagram
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) {
        __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] -
                       static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<long long>(num / prev);
      }
    prev = a[k][k];
  }
  return std::llabs(sign * a[m - 1][m - 1]);
}

}  // namespace s3color
