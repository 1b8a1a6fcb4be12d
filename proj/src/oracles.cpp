#include "invarr/oracles.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "invarr/inversions.hpp"

namespace invarr::oracle {

std::vector<Permutation> bruhat_down_set_by_chains(const Permutation& w) {
  const int n = w.size();
  std::set<Permutation> seen{w};
  std::vector<Permutation> frontier{w};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& v : frontier) {
      const int length = inversion_count(v);
      std::vector<int> word = v.values();
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          std::swap(word[a], word[b]);
          Permutation x(word);
          std::swap(word[a], word[b]);
          if (inversion_count(x) == length - 1 && seen.insert(x).second) next.push_back(x);
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool bruhat_leq_by_chains(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("permutations of different sizes");
  const auto down = bruhat_down_set_by_chains(w);
  return std::binary_search(down.begin(), down.end(), u);
}

std::uint64_t acyclic_orientations_by_enumeration(const InversionGraph& g) {
  const auto edges = g.edges.pairs();
  const int m = static_cast<int>(edges.size());
  if (m > 24) throw std::invalid_argument("orientation enumeration is limited to 24 edges");
  const int n = g.n;
  std::uint64_t acyclic = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    // out[v]: heads of arcs leaving v.
    std::vector<std::uint32_t> out(n, 0);
    for (int e = 0; e < m; ++e) {
      auto [a, b] = edges[e];
      if (bits >> e & 1U) {
        out[b - 1] |= std::uint32_t{1} << (a - 1);
      } else {
        out[a - 1] |= std::uint32_t{1} << (b - 1);
      }
    }
    // Repeatedly strip sinks; a cycle leaves vertices behind.
    std::uint32_t alive = (std::uint32_t{1} << n) - 1;
    bool progress = true;
    while (alive && progress) {
      progress = false;
      for (int v = 0; v < n; ++v) {
        if ((alive >> v & 1U) && (out[v] & alive) == 0) {
          alive &= ~(std::uint32_t{1} << v);
          progress = true;
        }
      }
    }
    acyclic += alive == 0;
  }
  return acyclic;
}

namespace {

std::uint64_t place(const Board& allowed, int row, std::uint32_t used) {
  if (row > allowed.n()) return 1;
  std::uint64_t total = 0;
  for (int c = 1; c <= allowed.n(); ++c) {
    if (allowed.contains(row, c) && !(used >> (c - 1) & 1U)) total += place(allowed, row + 1, used | (1U << (c - 1)));
  }
  return total;
}

}  // namespace

std::uint64_t rook_placements_by_backtracking(const Board& allowed) { return place(allowed, 1, 0); }

FilteredInterval weak_interval_by_filter(const Permutation& w) {
  const InversionSet top = inversion_set(w);
  FilteredInterval out;
  Permutation u = Permutation::identity(w.size());
  do {
    const InversionSet s = inversion_set(u);
    if (s.is_subset_of(top)) {
      ++out.size;
      out.poincare.add_term(s.count(), 1);
    }
  } while (next_lexicographic(u));
  return out;
}

std::vector<InversionGraph> seeded_random_graphs(int count, int vertices, int max_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= vertices; ++i) {
    for (int j = i + 1; j <= vertices; ++j) slots.emplace_back(i, j);
  }
  const int cap = std::min<int>(max_edges, static_cast<int>(slots.size()));
  std::vector<InversionGraph> out;
  for (int k = 0; k < count; ++k) {
    // Partial Fisher-Yates on raw engine output keeps the stream portable.
    auto pool = slots;
    const int m = static_cast<int>(rng() % static_cast<std::uint64_t>(cap + 1));
    std::vector<std::pair<int, int>> chosen;
    for (int e = 0; e < m; ++e) {
      const auto pick = e + static_cast<std::size_t>(rng() % (pool.size() - e));
      std::swap(pool[e], pool[pick]);
      chosen.push_back(pool[e]);
    }
    out.push_back(InversionGraph::from_edges(vertices, chosen));
  }
  return out;
}

}  // namespace invarr::oracle
