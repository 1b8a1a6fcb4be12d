#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "invarr/permutation.hpp"

namespace invarr {

// A permutation of length at most 6 used as a pattern.
class Pattern {
 public:
  static constexpr int kMaxLength = 6;

  explicit Pattern(Permutation p);
  static Pattern parse(std::string_view text);

  const Permutation& permutation() const { return perm_; }
  int size() const { return perm_.size(); }
  std::string to_string() const { return perm_.to_string(); }

  bool operator==(const Pattern&) const = default;

 private:
  Permutation perm_;
};

// True iff some subsequence of w is order-isomorphic to p. A pattern longer
// than w is simply not contained.
bool contains_pattern(const Permutation& w, const Pattern& p);

bool avoids_all(const Permutation& w, std::span<const Pattern> patterns);

namespace patterns {

// {231, 312}: the layered permutations.
const std::vector<Pattern>& layered();
// {4231, 35142, 42513, 351624}: Schubert varieties defined by inclusions.
const std::vector<Pattern>& defined_by_inclusions();
// {3412, 4231}: smooth Schubert varieties.
const std::vector<Pattern>& smooth();

}  // namespace patterns

}  // namespace invarr
