#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "invarr/permutation.hpp"

namespace invarr {

// A set of position pairs (i, j), 1 <= i < j <= n, packed as a bit mask over
// the C(n,2) slots in lexicographic (i, j) order. Doubles as the edge set of
// the inversion graph and the hyperplane index set of the arrangement.
class InversionSet {
 public:
  static constexpr int kMaxSize = Permutation::kMaxSize;
  static constexpr int kWords = (kMaxSize * (kMaxSize - 1) / 2 + 63) / 64;

  explicit InversionSet(int n);

  int n() const { return n_; }

  // Slot of (i, j) in lexicographic pair order, 0-based.
  static int slot(int n, int i, int j) { return (i - 1) * (2 * n - i) / 2 + (j - i - 1); }

  bool contains(int i, int j) const {
    const int s = slot(n_, i, j);
    return (bits_[s >> 6] >> (s & 63)) & 1U;
  }
  void insert(int i, int j) {
    const int s = slot(n_, i, j);
    bits_[s >> 6] |= std::uint64_t{1} << (s & 63);
  }
  void erase(int i, int j) {
    const int s = slot(n_, i, j);
    bits_[s >> 6] &= ~(std::uint64_t{1} << (s & 63));
  }

  int count() const {
    int c = 0;
    for (auto word : bits_) c += std::popcount(word);
    return c;
  }
  bool empty() const { return count() == 0; }

  bool is_subset_of(const InversionSet& other) const {
    for (int k = 0; k < kWords; ++k) {
      if (bits_[k] & ~other.bits_[k]) return false;
    }
    return true;
  }

  // Members in lexicographic order.
  std::vector<std::pair<int, int>> pairs() const;

  std::size_t hash() const;

  bool operator==(const InversionSet&) const = default;

 private:
  int n_;
  std::array<std::uint64_t, kWords> bits_{};
};

// I(w) = {(i, j) : i < j, w_i > w_j}
InversionSet inversion_set(const Permutation& w);

// True iff S = I(u) for some u: both transitivity and co-transitivity hold.
bool is_inversion_set(const InversionSet& s);

}  // namespace invarr

template <>
struct std::hash<invarr::InversionSet> {
  std::size_t operator()(const invarr::InversionSet& s) const noexcept { return s.hash(); }
};
