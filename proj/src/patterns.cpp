#include "invarr/patterns.hpp"

#include <array>
#include <stdexcept>

namespace invarr {

Pattern::Pattern(Permutation p) : perm_(p) {
  if (p.size() > kMaxLength) {
    throw std::invalid_argument("pattern " + p.to_string() + " longer than " + std::to_string(kMaxLength));
  }
}

Pattern Pattern::parse(std::string_view text) { return Pattern(parse_permutation(text)); }

namespace {

// Backtracking over positions: chosen[t] is the position matched to pattern
// letter t, and each extension keeps the relative order of all earlier picks.
struct PatternSearch {
  std::span<const std::uint8_t> w;
  std::span<const std::uint8_t> p;
  std::array<std::uint8_t, Pattern::kMaxLength> chosen{};

  bool extend(int t, int from) {
    const int k = static_cast<int>(p.size());
    if (t == k) return true;
    const int n = static_cast<int>(w.size());
    // Leave room for the k - t - 1 letters still to place.
    for (int pos = from; pos <= n - (k - t); ++pos) {
      bool consistent = true;
      for (int s = 0; s < t; ++s) {
        if ((w[chosen[s]] < w[pos]) != (p[s] < p[t])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      chosen.at(t) = static_cast<std::uint8_t>(pos);
      if (extend(t + 1, pos + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool contains_pattern(const Permutation& w, const Pattern& p) {
  if (p.size() > w.size()) return false;
  PatternSearch search{w.word(), p.permutation().word()};
  return search.extend(0, 0);
}

bool avoids_all(const Permutation& w, std::span<const Pattern> patterns) {
  for (const Pattern& p : patterns) {
    if (contains_pattern(w, p)) return false;
  }
  return true;
}

namespace patterns {

const std::vector<Pattern>& layered() {
  static const std::vector<Pattern> bundle{Pattern::parse("231"), Pattern::parse("312")};
  return bundle;
}

const std::vector<Pattern>& defined_by_inclusions() {
  static const std::vector<Pattern> bundle{Pattern::parse("4231"), Pattern::parse("35142"),
                                           Pattern::parse("42513"), Pattern::parse("351624")};
  return bundle;
}

const std::vector<Pattern>& smooth() {
  static const std::vector<Pattern> bundle{Pattern::parse("3412"), Pattern::parse("4231")};
  return bundle;
}

}  // namespace patterns

}  // namespace invarr
