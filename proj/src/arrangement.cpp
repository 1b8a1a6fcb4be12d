#include "invarr/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "invarr/checked.hpp"

namespace invarr {

InversionGraph InversionGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  InversionGraph g{n, InversionSet(n)};
  for (auto [a, b] : edges) {
    if (a == b || a < 1 || b < 1 || a > n || b > n) {
      throw std::invalid_argument("invalid edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    g.edges.insert(std::min(a, b), std::max(a, b));
  }
  return g;
}

InversionGraph inversion_graph(const Permutation& w) { return {w.size(), inversion_set(w)}; }

namespace {

using Poly = ChromaticPolynomial;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j], "chromatic polynomial"), "chromatic polynomial");
    }
  }
  return out;
}

Poly poly_combine(const Poly& a, const Poly& b, bool subtract) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t x = i < a.size() ? a[i] : 0;
    const std::int64_t y = i < b.size() ? b[i] : 0;
    out[i] = subtract ? checked_sub(x, y, "chromatic polynomial") : checked_add(x, y, "chromatic polynomial");
  }
  return out;
}

// x (x - 1) ... (x - k + 1)
Poly falling_factorial(int k) {
  Poly out{1};
  for (int i = 0; i < k; ++i) out = poly_mul(out, Poly{-i, 1});
  return out;
}

// Vertices 0..k-1; adj[v] is a bit mask of neighbours.
struct Graph {
  std::vector<std::uint32_t> adj;

  int order() const { return static_cast<int>(adj.size()); }
  int degree(int v) const { return std::popcount(adj[v]); }
  int size() const {
    int twice = 0;
    for (auto m : adj) twice += std::popcount(m);
    return twice / 2;
  }

  // Drops v and shifts higher labels down by one.
  Graph without(int v) const {
    Graph g;
    const std::uint32_t low = (std::uint32_t{1} << v) - 1;
    for (int u = 0; u < order(); ++u) {
      if (u == v) continue;
      const std::uint32_t m = adj[u];
      g.adj.push_back((m & low) | ((m >> 1) & ~low));
    }
    return g;
  }

  Graph induced(std::uint32_t vertices) const {
    Graph g;
    std::vector<int> label(order(), -1);
    int next = 0;
    for (int v = 0; v < order(); ++v) {
      if (vertices >> v & 1U) label[v] = next++;
    }
    for (int v = 0; v < order(); ++v) {
      if (!(vertices >> v & 1U)) continue;
      std::uint32_t m = 0;
      for (int u = 0; u < order(); ++u) {
        if ((adj[v] >> u & 1U) && label[u] >= 0) m |= std::uint32_t{1} << label[u];
      }
      g.adj.push_back(m);
    }
    return g;
  }

  // Merges v into u (u < v) and drops v.
  Graph contract(int u, int v) const {
    Graph g = *this;
    g.adj[u] |= g.adj[v];
    for (int x = 0; x < order(); ++x) {
      if (g.adj[v] >> x & 1U) g.adj[x] |= std::uint32_t{1} << u;
    }
    g.adj[u] &= ~((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
    return g.without(v);
  }

  void toggle(int u, int v) {
    adj[u] ^= std::uint32_t{1} << v;
    adj[v] ^= std::uint32_t{1} << u;
  }

  std::uint32_t component_of(int v) const {
    std::uint32_t seen = std::uint32_t{1} << v;
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }
};

class ChromaticSolver {
 public:
  Poly solve(const Graph& g) {
    const int k = g.order();
    if (k == 0) return Poly{1};

    const std::uint32_t all = k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
    const std::uint32_t first = g.component_of(0);
    if (first != all) return poly_mul(solve(g.induced(first)), solve(g.induced(all & ~first)));

    const int m = g.size();
    if (m == k * (k - 1) / 2) return falling_factorial(k);
    if (m == k - 1) return poly_mul(Poly{0, 1}, power(Poly{-1, 1}, k - 1));

    // A vertex whose neighbourhood is a clique is coloured last: chi(G) = (x - d) chi(G - v).
    for (int v = 0; v < k; ++v) {
      if (is_clique(g, g.adj[v])) return poly_mul(Poly{-g.degree(v), 1}, solve(g.without(v)));
    }

    const std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Poly result;
    if (2 * m > k * (k - 1) / 2) {
      // chi(G) = chi(G + uv) + chi(G / uv) for a non-edge uv.
      auto [u, v] = pick_pair(g, false);
      Graph added = g;
      added.toggle(u, v);
      result = poly_combine(solve(added), solve(g.contract(u, v)), false);
    } else {
      // chi(G) = chi(G - uv) - chi(G / uv) for an edge uv.
      auto [u, v] = pick_pair(g, true);
      Graph deleted = g;
      deleted.toggle(u, v);
      result = poly_combine(solve(deleted), solve(g.contract(u, v)), true);
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  static Poly power(const Poly& base, int e) {
    Poly out{1};
    for (int i = 0; i < e; ++i) out = poly_mul(out, base);
    return out;
  }

  static bool is_clique(const Graph& g, std::uint32_t vertices) {
    for (std::uint32_t f = vertices; f; f &= f - 1) {
      const int v = std::countr_zero(f);
      if ((vertices & ~(std::uint32_t{1} << v) & ~g.adj[v]) != 0) return false;
    }
    return true;
  }

  // An edge (or non-edge) at the vertex of smallest degree, u < v.
  static std::pair<int, int> pick_pair(const Graph& g, bool edge) {
    std::vector<int> by_degree(g.order());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int u : by_degree) {
      for (int v = 0; v < g.order(); ++v) {
        if (v == u) continue;
        if (static_cast<bool>(g.adj[u] >> v & 1U) == edge) return {std::min(u, v), std::max(u, v)};
      }
    }
    throw std::logic_error("no pair to branch on");
  }

  // Relabels vertices by (degree, neighbour degree sum). Two graphs with equal
  // keys are isomorphic; the converse may fail, which only costs a memo miss.
  static std::string canonical_key(const Graph& g) {
    const int k = g.order();
    std::vector<std::pair<int, int>> sig(k);
    for (int v = 0; v < k; ++v) {
      int s = 0;
      for (std::uint32_t f = g.adj[v]; f; f &= f - 1) s += g.degree(std::countr_zero(f));
      sig[v] = {g.degree(v), s};
    }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> label(k);
    for (int i = 0; i < k; ++i) label[order[i]] = i;

    std::string key(static_cast<std::size_t>(k) * 4 + 1, '\0');
    key[0] = static_cast<char>(k);
    for (int i = 0; i < k; ++i) {
      std::uint32_t m = 0;
      for (std::uint32_t f = g.adj[order[i]]; f; f &= f - 1) m |= std::uint32_t{1} << label[std::countr_zero(f)];
      for (int b = 0; b < 4; ++b) key[1 + 4 * i + b] = static_cast<char>(m >> (8 * b) & 0xFF);
    }
    return key;
  }

  std::unordered_map<std::string, Poly> memo_;
};

Graph to_graph(const InversionGraph& g) {
  Graph out;
  out.adj.assign(g.n, 0);
  for (auto [i, j] : g.edges.pairs()) out.toggle(i - 1, j - 1);
  return out;
}

}  // namespace

ChromaticPolynomial chromatic_polynomial(const InversionGraph& g) {
  if (g.n > kAcyclicOrientationMaxVertices) {
    throw std::invalid_argument("chromatic polynomial is limited to " +
                                std::to_string(kAcyclicOrientationMaxVertices) + " vertices");
  }
  ChromaticSolver solver;
  Poly p = solver.solve(to_graph(g));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

std::uint64_t count_acyclic_orientations(const InversionGraph& g) {
  const Poly p = chromatic_polynomial(g);
  std::int64_t value = 0;
  std::int64_t sign = 1;
  for (std::int64_t c : p) {
    value = checked_add(value, checked_mul(sign, c, "acyclic orientation count"), "acyclic orientation count");
    sign = -sign;
  }
  return static_cast<std::uint64_t>(value < 0 ? -value : value);
}

RegionSet regions(const Permutation& w) {
  const int n = w.size();
  if (n > kRegionMaxSize) {
    throw std::invalid_argument("region enumeration is limited to n <= " + std::to_string(kRegionMaxSize));
  }
  RegionSet out;
  out.n = n;
  out.hyperplanes = inversion_set(w).pairs();

  // rank(p) is the position of x_p in the increasing order of coordinates.
  std::vector<std::uint64_t> signs;
  signs.reserve(factorial(n));
  Permutation rank = Permutation::identity(n);
  do {
    std::uint64_t s = 0;
    for (std::size_t e = 0; e < out.hyperplanes.size(); ++e) {
      auto [i, j] = out.hyperplanes[e];
      if (rank(i) > rank(j)) s |= std::uint64_t{1} << e;
    }
    signs.push_back(s);
  } while (next_lexicographic(rank));
  std::sort(signs.begin(), signs.end());
  signs.erase(std::unique(signs.begin(), signs.end()), signs.end());
  out.signs = std::move(signs);
  return out;
}

QPolynomial distance_enumerator(const RegionSet& regions) {
  QPolynomial out;
  for (std::uint64_t s : regions.signs) out.add_term(std::popcount(s), 1);
  return out;
}

QPolynomial distance_enumerator(const Permutation& w) { return distance_enumerator(regions(w)); }

}  // namespace invarr
