#pragma once

// Permutations of {1..n} in one-line notation, Lehmer codes and the
// basic enumeration helpers used by every other part of the library.
//
// Positions and values are 1-based at the API: w(i) is the i-th letter.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invarr {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Permutation {
 public:
  // n! must fit in 64 bits.
  static constexpr int kMaxSize = 20;

  // Throws std::invalid_argument unless `word` is a bijection on {1..n}.
  explicit Permutation(std::span<const int> word);
  Permutation(std::initializer_list<int> word);

  static Permutation identity(int n);
  // w0 = n n-1 ... 1
  static Permutation longest(int n);

  int size() const { return size_; }
  int operator()(int i) const { return word_[i - 1]; }
  std::span<const std::uint8_t> word() const { return {word_.data(), static_cast<std::size_t>(size_)}; }
  std::vector<int> values() const;

  bool is_identity() const;

  // Compact digits for n <= 9, comma separated otherwise.
  std::string to_string() const;

  // Same size compares lexicographically.
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  Permutation() = default;
  friend bool next_lexicographic(Permutation& w);
  friend Permutation nth_permutation(int n, std::uint64_t rank);
  friend Permutation inverse(const Permutation& w);
  friend Permutation reverse_complement(const Permutation& w);

  std::uint8_t size_ = 0;
  std::array<std::uint8_t, kMaxSize> word_{};
};

// Accepts "25134", "2,5,1,3,4" or "2 5 1 3 4". Compact digit strings are only
// accepted for n <= 9. Throws ParseError naming the offending token.
Permutation parse_permutation(std::string_view text);

Permutation inverse(const Permutation& w);
Permutation reverse_complement(const Permutation& w);

// Steps to the lexicographic successor; false (and w unchanged) at w0.
bool next_lexicographic(Permutation& w);

std::uint64_t factorial(int n);

// The permutation of lexicographic rank `rank` (0-based) in S_n.
Permutation nth_permutation(int n, std::uint64_t rank);
std::uint64_t lexicographic_rank(const Permutation& w);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

int inversion_count(const Permutation& w);

struct LehmerCode {
  // entries[i-1] = c_i(w) = #{j > i : w_j < w_i}
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[i - 1]; }
  int sum() const;
  // Componentwise <=.
  bool dominated_by(const LehmerCode& other) const;
  bool operator==(const LehmerCode&) const = default;
};

LehmerCode lehmer_code(const Permutation& w);
Permutation from_lehmer_code(const LehmerCode& code);

// prod_i (c_i(w) + 1), overflow-checked.
std::uint64_t code_product(const Permutation& w);

}  // namespace invarr
