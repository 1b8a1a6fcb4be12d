#include "invarr/orders.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "invarr/inversions.hpp"

namespace invarr {

namespace {

void require_same_size(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) {
    throw std::invalid_argument("permutations of different sizes: " + std::to_string(u.size()) + " and " +
                                std::to_string(w.size()));
  }
}

void require_cap(const Permutation& w, int cap, const char* what) {
  if (w.size() > cap) {
    throw std::invalid_argument(std::string(what) + " is limited to n <= " + std::to_string(cap) + ", got n = " +
                                std::to_string(w.size()));
  }
}

// Ehresmann tableau rows 1..n-1 flattened: row k is the first k letters
// sorted decreasingly. Row n is the same for every permutation.
void write_tableau(const Permutation& w, std::uint8_t* out) {
  std::array<std::uint8_t, Permutation::kMaxSize> row{};
  for (int k = 1; k < w.size(); ++k) {
    // Insert w(k) into the decreasing row of length k-1.
    int pos = k - 1;
    while (pos > 0 && row[pos - 1] < w(k)) {
      row[pos] = row[pos - 1];
      --pos;
    }
    row[pos] = static_cast<std::uint8_t>(w(k));
    std::copy(row.begin(), row.begin() + k, out);
    out += k;
  }
}

std::size_t tableau_size(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

IntervalSummary summarize(const std::vector<Permutation>& members, const Permutation& w) {
  IntervalSummary s;
  s.size = members.size();
  for (const auto& u : members) s.poincare.add_term(inversion_count(u), 1);
  s.max_length = inversion_count(w);
  return s;
}

}  // namespace

bool weak_leq(const Permutation& u, const Permutation& w) {
  require_same_size(u, w);
  return inversion_set(u).is_subset_of(inversion_set(w));
}

std::vector<Permutation> weak_interval_members(const Permutation& w) {
  require_cap(w, kWeakIntervalMaxSize, "weak interval enumeration");
  const int n = w.size();
  const InversionSet top = inversion_set(w);

  std::vector<Permutation> members;
  std::unordered_set<InversionSet> visited;
  std::deque<std::pair<Permutation, InversionSet>> queue;

  const Permutation id = Permutation::identity(n);
  visited.insert(inversion_set(id));
  queue.emplace_back(id, inversion_set(id));
  while (!queue.empty()) {
    auto [u, inv_u] = queue.front();
    queue.pop_front();
    members.push_back(u);
    const Permutation pos = inverse(u);
    for (int value = 1; value < n; ++value) {
      const int p = pos(value);
      const int q = pos(value + 1);
      // s_i u gains exactly the inversion (p, q) when i sits left of i+1.
      if (p > q) continue;
      InversionSet next = inv_u;
      next.insert(p, q);
      if (!next.is_subset_of(top) || visited.contains(next)) continue;
      visited.insert(next);
      std::vector<int> word = u.values();
      std::swap(word[p - 1], word[q - 1]);
      queue.emplace_back(Permutation(word), next);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

IntervalSummary weak_interval(const Permutation& w) { return summarize(weak_interval_members(w), w); }

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  require_same_size(u, w);
  const int n = w.size();
  std::array<std::uint8_t, Permutation::kMaxSize* (Permutation::kMaxSize - 1) / 2> tu{}, tw{};
  write_tableau(u, tu.data());
  write_tableau(w, tw.data());
  const std::size_t len = tableau_size(n);
  for (std::size_t k = 0; k < len; ++k) {
    if (tu[k] > tw[k]) return false;
  }
  return true;
}

std::vector<Permutation> bruhat_interval_members(const Permutation& w) {
  require_cap(w, kBruhatIntervalMaxSize, "Bruhat interval enumeration");
  std::vector<Permutation> members;
  Permutation u = Permutation::identity(w.size());
  do {
    if (bruhat_leq(u, w)) members.push_back(u);
  } while (next_lexicographic(u));
  return members;
}

IntervalSummary bruhat_interval(const Permutation& w) { return summarize(bruhat_interval_members(w), w); }

BruhatTable::BruhatTable(int n) : n_(n), stride_(tableau_size(n)) {
  if (n < 1 || n > kBruhatIntervalMaxSize) {
    throw std::invalid_argument("Bruhat table is limited to 1 <= n <= " + std::to_string(kBruhatIntervalMaxSize));
  }
  const std::size_t count = factorial(n);
  tableaux_.resize(count * stride_);
  inversions_.resize(count);
  Permutation u = Permutation::identity(n);
  std::size_t rank = 0;
  do {
    write_tableau(u, tableaux_.data() + rank * stride_);
    inversions_[rank] = static_cast<std::uint8_t>(inversion_count(u));
    ++rank;
  } while (next_lexicographic(u));
}

bool BruhatTable::leq(std::size_t u_rank, std::size_t w_rank) const {
  if (inversions_[u_rank] > inversions_[w_rank]) return false;
  const std::uint8_t* tu = tableaux_.data() + u_rank * stride_;
  const std::uint8_t* tw = tableaux_.data() + w_rank * stride_;
  for (std::size_t k = 0; k < stride_; ++k) {
    if (tu[k] > tw[k]) return false;
  }
  return true;
}

IntervalSummary BruhatTable::interval(std::size_t w_rank) const {
  std::vector<std::uint64_t> graded(inversions_[w_rank] + 1, 0);
  std::uint64_t size = 0;
  for (std::size_t u = 0; u < inversions_.size(); ++u) {
    if (leq(u, w_rank)) {
      ++graded[inversions_[u]];
      ++size;
    }
  }
  return {size, QPolynomial(std::move(graded)), inversions_[w_rank]};
}

QPolynomial product_q_formula(const Permutation& w) {
  QPolynomial out = QPolynomial::one();
  for (int c : lehmer_code(w).entries) out = out * QPolynomial::q_integer(c + 1);
  return out;
}

bool code_monotone_check(const Permutation& u, const Permutation& w) {
  require_same_size(u, w);
  return lehmer_code(u).dominated_by(lehmer_code(w));
}

std::optional<Reduction231> witness_231_reduction(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(w(j + 1) < w(i) && w(i) < w(j))) continue;

      // Tail values {w_j, w_{j+2}, ..., w_n} placed in the relative order of
      // w_{j+1}, w_{j+2}, ..., w_n.
      std::vector<int> shape;
      std::vector<int> pool{w(j)};
      for (int k = j + 1; k <= n; ++k) shape.push_back(w(k));
      for (int k = j + 2; k <= n; ++k) pool.push_back(w(k));
      std::sort(pool.begin(), pool.end());

      std::vector<int> word;
      for (int k = 1; k < j; ++k) word.push_back(w(k));
      word.push_back(w(j + 1));
      for (int v : shape) {
        const auto rank = std::count_if(shape.begin(), shape.end(), [v](int x) { return x < v; });
        word.push_back(pool[static_cast<std::size_t>(rank)]);
      }
      return Reduction231{{i, j, j + 1}, Permutation(word)};
    }
  }
  return std::nullopt;
}

}  // namespace invarr
