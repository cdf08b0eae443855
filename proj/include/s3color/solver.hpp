#pragma once

#include <optional>
#include <vector>

#include "s3color/diagram.hpp"

namespace s3color {

// A coloring assigns one non-identity element to every color slot of a
// diagram: slots [0, num_arcs) are arcs, the remaining slots are free loops.
using Coloring = std::vector<S3>;

// True iff the assignment satisfies the relation at every crossing and uses
// no identity element.  Throws std::invalid_argument on a size mismatch.
bool is_valid_coloring(const Diagram& d, const Coloring& c);

// All valid colorings, lexicographically sorted in the element order
// s < t < sts < st < ts.
std::vector<Coloring> enumerate_colorings(const Diagram& d);

// Number of distinct non-identity elements used.
int palette_size(const Coloring& c);

struct Classification {
  // counts[n] = number of valid colorings using exactly n distinct colors.
  std::vector<long long> counts = std::vector<long long>(6, 0);
  // First witness (in enumeration order) for each palette size, if any.
  std::vector<std::optional<Coloring>> witness =
      std::vector<std::optional<Coloring>>(6);
  long long total = 0;

  bool achievable(int n) const { return n >= 1 && n <= 5 && counts[n] > 0; }
  std::vector<int> achievable_sizes() const;
};

Classification classify(const Diagram& d);

// Conjugacy class of each component's colors.  Requires every component to be
// colored within a single class (true for any valid coloring); throws
// std::logic_error otherwise.
std::vector<S3Class> component_class_profile(const Diagram& d,
                                             const Coloring& c);

// Direct 4-color construction for plat diagrams whose entries are all even:
// seed the two west arcs of the innermost block with s and st and propagate.
// coloring is empty when propagation hits a contradiction.
struct ConwayConstruction {
  Diagram diagram;
  std::optional<Coloring> coloring;
};
ConwayConstruction constructive_conway_coloring(const std::vector<int>& entries);

// Number of Fox p-colorings (including monochromatic ones), p prime.
// Diagrams with free loops are rejected.
long long fox_coloring_count(const Diagram& d, int p);

// Determinant of the link: |det| of the crossing/arc relation matrix with one
// row and one column removed.  Diagrams with no crossings give 1; split
// diagrams give 0.  Free loops are rejected.
long long determinant(const Diagram& d);

}  // namespace s3color
