#pragma once

// South-west diagrams and rook placements on their complements.

#include <cstdint>
#include <utility>
#include <vector>

#include "invarr/permutation.hpp"

namespace invarr {

inline constexpr int kRookMaxSize = 12;

// Subset of [n] x [n]. Row r is a column mask: bit c-1 set iff (r, c) is a
// cell. Rows are numbered from 1 at the top.
class Board {
 public:
  explicit Board(int n);

  int n() const { return n_; }
  bool contains(int row, int col) const { return rows_[row - 1] >> (col - 1) & 1U; }
  void insert(int row, int col);
  std::uint32_t row_mask(int row) const { return rows_[row - 1]; }
  int row_size(int row) const;
  std::vector<std::pair<int, int>> cells() const;

  Board complement() const;

  bool operator==(const Board&) const = default;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

// O_w = {(i, w_j) : i < j, w_i < w_j}
Board southwest_diagram(const Permutation& w);

// Permanent of the 0/1 matrix of `allowed`: the number of placements of n
// non-attacking rooks on its cells. Inclusion-exclusion over column subsets.
std::uint64_t board_permanent(const Board& allowed);

// rk(w): n rooks on the complement of O_w.
std::uint64_t rook_count(const Permutation& w);

// Row sizes weakly decreasing and each row flush against the last column.
bool is_right_justified_ferrers(const Board& b);

// Complement cells per row; equals c_i(w) + i.
std::vector<int> complement_row_freedom(const Permutation& w);

}  // namespace invarr
