#include "invarr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "invarr/checked.hpp"

namespace invarr {

namespace {

void validate_bijection(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  if (n < 1) throw std::invalid_argument("permutation must have at least one letter");
  if (n > Permutation::kMaxSize) {
    throw std::invalid_argument("permutation size " + std::to_string(n) + " exceeds " +
                                std::to_string(Permutation::kMaxSize));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::span<const int> word) {
  validate_bijection(word);
  size_ = static_cast<std::uint8_t>(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) word_[i] = static_cast<std::uint8_t>(word[i]);
}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::span<const int>(word.begin(), word.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(w);
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(w);
}

std::vector<int> Permutation::values() const { return {word_.begin(), word_.begin() + size_}; }

bool Permutation::is_identity() const {
  for (int i = 0; i < size_; ++i) {
    if (word_[i] != i + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size_; ++i) {
    if (size_ > 9 && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw ParseError("empty permutation");

  std::vector<int> word;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    std::string_view digits = tokens[0];
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw ParseError("invalid token '" + std::string(digits) + "'");
    }
    if (digits.size() > 9) {
      throw ParseError("compact digit notation '" + std::string(digits) +
                       "' is only allowed for n <= 9; separate values with commas or spaces");
    }
    for (char ch : digits) word.push_back(ch - '0');
  } else {
    for (std::string_view tok : tokens) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("invalid token '" + std::string(tok) + "'");
      }
      word.push_back(v);
    }
  }

  const int n = static_cast<int>(word.size());
  if (n > Permutation::kMaxSize) {
    throw ParseError("permutation size " + std::to_string(n) + " exceeds " +
                     std::to_string(Permutation::kMaxSize));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw ParseError("not a bijection: value '" + std::to_string(v) + "' out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw ParseError("not a bijection: duplicate value '" + std::to_string(v) + "'");
    seen[v] = true;
  }
  return Permutation(word);
}

Permutation inverse(const Permutation& w) {
  Permutation r;
  r.size_ = static_cast<std::uint8_t>(w.size());
  for (int i = 1; i <= w.size(); ++i) r.word_[w(i) - 1] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation reverse_complement(const Permutation& w) {
  Permutation r;
  const int n = w.size();
  r.size_ = static_cast<std::uint8_t>(n);
  for (int i = 1; i <= n; ++i) r.word_[n - i] = static_cast<std::uint8_t>(n + 1 - w(i));
  return r;
}

bool next_lexicographic(Permutation& w) {
  return std::next_permutation(w.word_.begin(), w.word_.begin() + w.size_);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f = checked_mul<std::uint64_t>(f, k, "factorial");
  return f;
}

Permutation nth_permutation(int n, std::uint64_t rank) {
  if (n < 1 || n > Permutation::kMaxSize) throw std::invalid_argument("size out of range");
  if (rank >= factorial(n)) throw std::out_of_range("rank out of range for S_" + std::to_string(n));
  std::vector<std::uint8_t> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i + 1);
  Permutation r;
  r.size_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t block = factorial(n - 1 - i);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    r.word_[i] = pool[idx];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return r;
}

std::uint64_t lexicographic_rank(const Permutation& w) {
  const LehmerCode c = lehmer_code(w);
  std::uint64_t rank = 0;
  for (int i = 1; i <= w.size(); ++i) rank += static_cast<std::uint64_t>(c[i]) * factorial(w.size() - i);
  return rank;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  Permutation w = Permutation::identity(n);
  do {
    out.push_back(w);
  } while (next_lexicographic(w));
  return out;
}

int inversion_count(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) count += w(i) > w(j);
  }
  return count;
}

int LehmerCode::sum() const {
  int s = 0;
  for (int c : entries) s += c;
  return s;
}

bool LehmerCode::dominated_by(const LehmerCode& other) const {
  if (other.size() != size()) throw std::invalid_argument("Lehmer codes of different lengths");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] > other.entries[i]) return false;
  }
  return true;
}

LehmerCode lehmer_code(const Permutation& w) {
  LehmerCode c;
  c.entries.resize(w.size());
  for (int i = 1; i <= w.size(); ++i) {
    int count = 0;
    for (int j = i + 1; j <= w.size(); ++j) count += w(j) < w(i);
    c.entries[i - 1] = count;
  }
  return c;
}

Permutation from_lehmer_code(const LehmerCode& code) {
  const int n = code.size();
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> word;
  for (int i = 1; i <= n; ++i) {
    if (code[i] < 0 || code[i] > n - i) throw std::invalid_argument("invalid Lehmer code entry");
    word.push_back(pool[code[i]]);
    pool.erase(pool.begin() + code[i]);
  }
  return Permutation(word);
}

std::uint64_t code_product(const Permutation& w) {
  std::uint64_t p = 1;
  for (int c : lehmer_code(w).entries) p = checked_mul<std::uint64_t>(p, c + 1, "code product");
  return p;
}

}  // namespace invarr
