#pragma once

// Inversion graphs, acyclic orientations and the regions of the inversion
// hyperplane arrangement {x_i = x_j : (i, j) an inversion of w}.

#include <cstdint>
#include <utility>
#include <vector>

#include "invarr/inversions.hpp"
#include "invarr/permutation.hpp"
#include "invarr/qpoly.hpp"

namespace invarr {

inline constexpr int kAcyclicOrientationMaxVertices = 12;
inline constexpr int kRegionMaxSize = 8;

// Simple graph on vertices 1..n. The edge set is stored as pairs i < j,
// which for G_w is exactly I(w).
struct InversionGraph {
  int n;
  InversionSet edges;

  static InversionGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  int edge_count() const { return edges.count(); }
};

InversionGraph inversion_graph(const Permutation& w);

// Integer coefficients of the chromatic polynomial, index d holds x^d.
using ChromaticPolynomial = std::vector<std::int64_t>;

// Deletion-contraction (addition-contraction on dense graphs) with component
// splitting, simplicial-vertex elimination and a memo keyed by a
// degree-sorted relabeling of the adjacency.
ChromaticPolynomial chromatic_polynomial(const InversionGraph& g);

// ao(G) = |chi_G(-1)|.
std::uint64_t count_acyclic_orientations(const InversionGraph& g);

// Regions as sign vectors over the hyperplanes of A_w, taken in lexicographic
// order of I(w). Bit e is set iff x_i > x_j on the region, (i, j) the e-th
// inversion. `signs` is sorted and duplicate-free.
struct RegionSet {
  int n = 0;
  std::vector<std::pair<int, int>> hyperplanes;
  std::vector<std::uint64_t> signs;

  std::size_t size() const { return signs.size(); }
};

// Every region of a subarrangement of the braid arrangement is a union of
// chambers, so restricting the sign vectors of all n! chambers and removing
// duplicates enumerates the regions.
RegionSet regions(const Permutation& w);

// Regions graded by the number of hyperplanes separating them from the
// region containing x_1 < x_2 < ... < x_n (sign vector zero).
QPolynomial distance_enumerator(const Permutation& w);
QPolynomial distance_enumerator(const RegionSet& regions);

}  // namespace invarr
