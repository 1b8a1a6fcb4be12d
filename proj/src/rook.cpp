#include "invarr/rook.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "invarr/checked.hpp"

namespace invarr {

Board::Board(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > 31) throw std::invalid_argument("board size out of range: " + std::to_string(n));
}

void Board::insert(int row, int col) {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw std::out_of_range("cell (" + std::to_string(row) + "," + std::to_string(col) + ") outside board");
  }
  rows_[row - 1] |= std::uint32_t{1} << (col - 1);
}

int Board::row_size(int row) const { return std::popcount(rows_[row - 1]); }

std::vector<std::pair<int, int>> Board::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) {
      if (contains(r, c)) out.emplace_back(r, c);
    }
  }
  return out;
}

Board Board::complement() const {
  Board out(n_);
  const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
  for (int r = 0; r < n_; ++r) out.rows_[r] = ~rows_[r] & full;
  return out;
}

Board southwest_diagram(const Permutation& w) {
  Board b(w.size());
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) < w(j)) b.insert(i, w(j));
    }
  }
  return b;
}

std::uint64_t board_permanent(const Board& allowed) {
  const int n = allowed.n();
  if (n > kRookMaxSize) {
    throw std::invalid_argument("rook counting is limited to n <= " + std::to_string(kRookMaxSize));
  }
  // perm(A) = sum over column sets S of (-1)^(n - |S|) prod_r |row_r & S|.
  std::int64_t total = 0;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    std::int64_t prod = 1;
    for (int r = 1; r <= n && prod != 0; ++r) {
      prod = checked_mul<std::int64_t>(prod, std::popcount(allowed.row_mask(r) & s), "rook count");
    }
    if (prod == 0) continue;
    const bool negative = (n - std::popcount(s)) % 2 != 0;
    total = negative ? checked_sub(total, prod, "rook count") : checked_add(total, prod, "rook count");
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t rook_count(const Permutation& w) { return board_permanent(southwest_diagram(w).complement()); }

bool is_right_justified_ferrers(const Board& b) {
  const int n = b.n();
  for (int r = 1; r <= n; ++r) {
    const int a = b.row_size(r);
    if (r > 1 && a > b.row_size(r - 1)) return false;
    // Cells (r, n-a+1) .. (r, n).
    const std::uint32_t expected = a == 0 ? 0 : ((std::uint32_t{1} << a) - 1) << (n - a);
    if (b.row_mask(r) != expected) return false;
  }
  return true;
}

std::vector<int> complement_row_freedom(const Permutation& w) {
  const Board comp = southwest_diagram(w).complement();
  std::vector<int> out;
  for (int r = 1; r <= w.size(); ++r) out.push_back(comp.row_size(r));
  return out;
}

}  // namespace invarr
