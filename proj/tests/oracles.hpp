#pragma once

// Independent cross-checks used by the test suite: permutation arithmetic,
// brute-force enumeration, continued fractions, and hand-built diagrams.

#include <array>
#include <cstdlib>
#include <vector>

#include "s3color/diagram.hpp"
#include "s3color/solver.hpp"

namespace oracle {

using Perm = std::array<int, 3>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  return {b[a[0]], b[a[1]], b[a[2]]};
}

// Permutation images of the six elements, built only from the two letters.
inline Perm perm_of(s3color::S3 x) {
  const Perm id{0, 1, 2}, ps{1, 0, 2}, pt{0, 2, 1};
  switch (x) {
    case s3color::S3::e: return id;
    case s3color::S3::s: return ps;
    case s3color::S3::t: return pt;
    case s3color::S3::sts: return compose(compose(ps, pt), ps);
    case s3color::S3::st: return compose(ps, pt);
    default: return compose(pt, ps);
  }
}

// All valid colorings by exhaustive scan over 5^slots assignments, in the
// same lexicographic order the solver promises.
inline std::vector<s3color::Coloring> brute_force_colorings(
    const s3color::Diagram& d) {
  int slots = d.color_slots();
  std::vector<s3color::Coloring> out;
  long long total = 1;
  for (int i = 0; i < slots; ++i) total *= 5;
  for (long long idx = 0; idx < total; ++idx) {
    s3color::Coloring c(slots);
    long long rest = idx;
    for (int k = slots - 1; k >= 0; --k) {
      c[k] = s3color::kColors[rest % 5];
      rest /= 5;
    }
    if (s3color::is_valid_coloring(d, c)) out.push_back(c);
  }
  return out;
}

// Number of Fox p-colorings by exhaustive scan.
inline long long fox_brute(const s3color::Diagram& d, int p) {
  long long total = 1;
  for (int i = 0; i < d.num_arcs; ++i) total *= p;
  long long hits = 0;
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<int> v(d.num_arcs);
    long long rest = idx;
    for (int k = 0; k < d.num_arcs; ++k) {
      v[k] = static_cast<int>(rest % p);
      rest /= p;
    }
    bool ok = true;
    for (const s3color::Crossing& cr : d.crossings)
      if ((2 * v[cr.over] - v[cr.under_in] - v[cr.under_out]) % p != 0) {
        ok = false;
        break;
      }
    hits += ok;
  }
  return hits;
}

// |numerator| of the continued fraction c1 + 1/(c2 + 1/(... + 1/cn)).
inline long long cf_numerator(const std::vector<int>& entries) {
  long long p = entries.back(), q = 1;
  for (int i = static_cast<int>(entries.size()) - 2; i >= 0; --i) {
    long long pn = entries[i] * p + q;
    q = p;
    p = pn;
  }
  return std::llabs(p);
}

// Hand-built reference diagrams (independent of the generator).

inline s3color::Diagram trefoil_hand() {
  s3color::Diagram d;
  d.num_arcs = 3;
  d.crossings = {{+1, 0, 1, 2}, {+1, 1, 2, 0}, {+1, 2, 0, 1}};
  return d;
}

inline s3color::Diagram hopf_hand() {
  s3color::Diagram d;
  d.num_arcs = 2;
  d.crossings = {{+1, 0, 1, 1}, {+1, 1, 0, 0}};
  return d;
}

// One curled unknot over a second component that dives under it twice: a
// split pair drawn with three crossings.
inline s3color::Diagram split_hand() {
  s3color::Diagram d;
  d.num_arcs = 3;
  d.crossings = {{+1, 0, 0, 0}, {+1, 0, 1, 2}, {-1, 0, 2, 1}};
  return d;
}

inline s3color::Diagram curl_hand() {
  s3color::Diagram d;
  d.num_arcs = 1;
  d.crossings = {{+1, 0, 0, 0}};
  return d;
}

inline s3color::Diagram curl_with_loop_hand() {
  s3color::Diagram d = curl_hand();
  d.free_loops = 1;
  return d;
}

}  // namespace oracle
