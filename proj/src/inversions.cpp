#include "invarr/inversions.hpp"

#include <stdexcept>
#include <string>

namespace invarr {

InversionSet::InversionSet(int n) : n_(n) {
  if (n < 1 || n > kMaxSize) throw std::invalid_argument("inversion set size out of range: " + std::to_string(n));
}

std::vector<std::pair<int, int>> InversionSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t InversionSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  for (auto word : bits_) {
    h ^= word + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

InversionSet inversion_set(const Permutation& w) {
  InversionSet s(w.size());
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) s.insert(i, j);
    }
  }
  return s;
}

bool is_inversion_set(const InversionSet& s) {
  const int n = s.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const bool ij = s.contains(i, j);
        const bool jk = s.contains(j, k);
        const bool ik = s.contains(i, k);
        if (ij && jk && !ik) return false;
        if (ik && !ij && !jk) return false;
      }
    }
  }
  return true;
}

}  // namespace invarr
