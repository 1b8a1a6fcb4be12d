#pragma once

// Definitional routes kept independent of the fast paths they check.

#include <cstdint>
#include <vector>

#include "invarr/arrangement.hpp"
#include "invarr/permutation.hpp"
#include "invarr/qpoly.hpp"
#include "invarr/rook.hpp"

namespace invarr::oracle {

// [id, w] in Bruhat order by downward closure: v covers v t when the
// transposition t lowers the inversion count by exactly one. Sorted.
std::vector<Permutation> bruhat_down_set_by_chains(const Permutation& w);
bool bruhat_leq_by_chains(const Permutation& u, const Permutation& w);

// All 2^m orientations, keeping those without a directed cycle. m <= 24.
std::uint64_t acyclic_orientations_by_enumeration(const InversionGraph& g);

// Row-by-row backtracking over free columns.
std::uint64_t rook_placements_by_backtracking(const Board& allowed);

struct FilteredInterval {
  std::uint64_t size = 0;
  QPolynomial poincare;
};

// Filters all of S_n by I(u) being contained in I(w).
FilteredInterval weak_interval_by_filter(const Permutation& w);

// Graphs on `vertices` vertices with at most `max_edges` edges, drawn from a
// fixed mt19937_64 stream so every run sees the same list.
std::vector<InversionGraph> seeded_random_graphs(int count, int vertices, int max_edges, std::uint64_t seed);

}  // namespace invarr::oracle
