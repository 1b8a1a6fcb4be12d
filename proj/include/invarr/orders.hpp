#pragma once

// Left weak order and Bruhat order on S_n.
//
// The weak order is the left one: v covers u when v = s_i u with one more
// inversion, s_i exchanging the values i and i+1. u <= w iff I(u) is a
// subset of I(w). Bruhat comparison uses the tableau (prefix dominance)
// criterion; oracles.hpp carries the transposition-chain definition.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "invarr/permutation.hpp"
#include "invarr/qpoly.hpp"

namespace invarr {

inline constexpr int kWeakIntervalMaxSize = 12;
inline constexpr int kBruhatIntervalMaxSize = 8;

// [id, w] in one of the orders.
struct IntervalSummary {
  std::uint64_t size = 0;
  QPolynomial poincare;  // graded by inversion number
  int max_length = 0;    // inv(w)
};

bool weak_leq(const Permutation& u, const Permutation& w);

// Breadth-first upward closure from the identity, visited set keyed by
// inversion-set mask.
IntervalSummary weak_interval(const Permutation& w);
// Elements of [id, w] in lexicographic order.
std::vector<Permutation> weak_interval_members(const Permutation& w);

bool bruhat_leq(const Permutation& u, const Permutation& w);

// Filters all of S_n through bruhat_leq.
IntervalSummary bruhat_interval(const Permutation& w);
std::vector<Permutation> bruhat_interval_members(const Permutation& w);

// Precomputed tableaux for all of S_n, for computing every Bruhat interval
// of S_n in one pass. Entries are indexed by lexicographic rank.
class BruhatTable {
 public:
  explicit BruhatTable(int n);

  int n() const { return n_; }
  std::size_t order() const { return inversions_.size(); }
  bool leq(std::size_t u_rank, std::size_t w_rank) const;
  IntervalSummary interval(std::size_t w_rank) const;

 private:
  int n_;
  std::size_t stride_;
  std::vector<std::uint8_t> tableaux_;
  std::vector<std::uint8_t> inversions_;
};

// prod_i [c_i(w) + 1]
QPolynomial product_q_formula(const Permutation& w);

// c_i(u) <= c_i(w) for all i; necessary for u <= w in the weak order.
bool code_monotone_check(const Permutation& u, const Permutation& w);

struct Reduction231 {
  std::array<int, 3> triple;  // (i, j, j+1), 1-based
  Permutation reduced;        // c(reduced) < c(w) but reduced is not below w
};

// For w containing 231: the lexicographically smallest (i, j, j+1) with
// w_{j+1} < w_i < w_j, and the permutation obtained by keeping w_1..w_{j-1},
// writing w_{j+1} at position j, and filling the tail with
// {w_j, w_{j+2}, ..., w_n} in the relative order of w_{j+1} w_{j+2} ... w_n.
std::optional<Reduction231> witness_231_reduction(const Permutation& w);

}  // namespace invarr
