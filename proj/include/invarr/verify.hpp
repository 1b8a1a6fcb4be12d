#pragma once

// Exhaustive verification over S_n: every statistic for every permutation,
// the inequality chain wk <= prod <= rk = ao (= re) <= br, and each
// pattern-avoidance equality condition.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invarr/orders.hpp"
#include "invarr/permutation.hpp"
#include "invarr/qpoly.hpp"

namespace invarr {

enum class Depth { counts, polys, with_region_oracle };

Depth parse_depth(std::string_view text);
std::string_view to_string(Depth depth);

inline constexpr int kStatRecordMaxSize = kBruhatIntervalMaxSize;

struct StatRecord {
  explicit StatRecord(const Permutation& perm) : w(perm) {}

  Permutation w;
  int inv = 0;
  LehmerCode code;
  std::uint64_t prod = 0;
  std::uint64_t wk = 0;
  std::uint64_t br = 0;
  std::uint64_t ao = 0;
  std::uint64_t rk = 0;
  std::optional<std::uint64_t> re;
  bool avoids_231_312 = false;
  bool avoids_four = false;
  bool avoids_3412_4231 = false;
  std::optional<QPolynomial> weak_poly;
  std::optional<QPolynomial> bruhat_poly;
  std::optional<QPolynomial> product_poly;
  std::optional<QPolynomial> distance_poly;

  // re when the region oracle ran, ao otherwise.
  std::uint64_t regions_or_ao() const { return re.value_or(ao); }
};

// counts: all integer statistics. polys: adds the four polynomials, the
// distance polynomial coming from region enumeration. with_region_oracle:
// additionally fills re.
StatRecord stat_record(const Permutation& w, Depth depth);

struct Violation {
  std::string check;
  std::string details;
  StatRecord record;
};

struct SweepOptions {
  int n = 1;
  Depth depth = Depth::counts;
  int parallelism = 1;
  // n = 8 only runs at depth counts and only when set.
  bool allow_long = false;
  // Region enumeration costs n! per permutation. Above this size it runs on
  // `region_sample` evenly spaced lexicographic ranks instead of all of S_n.
  int region_full_max_n = 6;
  std::size_t region_sample = 1000;
};

struct SweepReport {
  int n = 0;
  Depth depth = Depth::counts;
  std::vector<StatRecord> records;  // lexicographic order of w
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> class_counts;
};

SweepReport sweep(const SweepOptions& options);

// The checks run on each record by sweep, appended to `out`.
void check_record(const StatRecord& r, std::vector<Violation>& out);

// Ranks that receive the region oracle at size n.
std::vector<std::uint64_t> region_sample_ranks(int n, const SweepOptions& options);

// Fast path versus definitional route, each over all of S_k for k up to the
// given bound (0 disables a check).
struct OracleCheckOptions {
  int bruhat_max_n = 5;
  int orientation_max_n = 5;
  int random_graphs = 50;
  int rook_max_n = 6;
  int weak_max_n = 6;
  int region_max_n = 6;
};

struct EquivalenceResult {
  explicit EquivalenceResult(std::string check) : name(std::move(check)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;

  bool passed() const { return mismatches == 0; }
};

std::vector<EquivalenceResult> oracle_equivalences(const OracleCheckOptions& options);

}  // namespace invarr
