// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "invarr/arrangement.hpp"
#include "invarr/orders.hpp"
#include "invarr/patterns.hpp"
#include "invarr/rook.hpp"
#include "invarr/verify.hpp"

using namespace invarr;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

// Runs `body`, then requires it to pass and to finish under `budget_ms`.
void criterion(int id, const char* title, double budget_ms, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const bool in_time = ms < budget_ms;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %2d %s: %s (%.3f ms, budget %.0f ms%s)\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), ms,
              budget_ms, in_time ? "" : ", OVER BUDGET");
  std::fflush(stdout);
}

int threads() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

// Counts iff-failures: (lhs holds) must equal (rhs holds) for every record.
template <typename Lhs, typename Rhs>
std::uint64_t iff_mismatches(const SweepReport& r, Lhs lhs, Rhs rhs) {
  std::uint64_t bad = 0;
  for (const auto& rec : r.records) bad += lhs(rec) != rhs(rec);
  return bad;
}

}  // namespace

int main() {
  const Pattern p231 = Pattern::parse("231");
  const Pattern p312 = Pattern::parse("312");

  // The single-measurement criterion runs on a warm process.
  (void)count_acyclic_orientations(inversion_graph(parse_permutation("21")));

  criterion(1, "Figure-1 reproduction ao(25134) = rk(25134) = 16", 1.0, [] {
    const Permutation w = parse_permutation("25134");
    const auto ao = count_acyclic_orientations(inversion_graph(w));
    const auto rk = rook_count(w);
    return Outcome{ao == 16 && rk == 16, "ao=" + std::to_string(ao) + " rk=" + std::to_string(rk)};
  });

  criterion(2, "Braid baseline re(w0) = n!", 10'000.0, [] {
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 7; ++n) {
      const Permutation w0 = Permutation::longest(n);
      const auto ao = count_acyclic_orientations(inversion_graph(w0));
      ok = ok && ao == factorial(n);
      detail += "n=" + std::to_string(n) + " ao=" + std::to_string(ao);
      if (n <= 6) {
        const auto re = regions(w0).size();
        ok = ok && re == factorial(n);
        detail += " re=" + std::to_string(re);
      }
      detail += n < 7 ? "; " : "";
    }
    return Outcome{ok, detail};
  });

  criterion(3, "Identity chain ao = rk on S_n (n <= 7), = regions on S_6", 60'000.0, [] {
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    for (int n = 1; n <= 7; ++n) {
      for (const Permutation& w : all_permutations(n)) {
        const auto ao = count_acyclic_orientations(inversion_graph(w));
        bad += ao != rook_count(w);
        if (n == 6) bad += regions(w).size() != ao;
        ++checked;
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " permutations, " + std::to_string(bad) + " mismatches"};
  });

  // Criteria 4-9 share one exhaustive S_7 sweep with polynomials; ao stands
  // in for re there, validated by criterion 3.
  const auto sweep_start = Clock::now();
  const SweepReport s7 = sweep({.n = 7, .depth = Depth::polys, .parallelism = threads()});
  const double sweep_ms = std::chrono::duration<double, std::milli>(Clock::now() - sweep_start).count();
  std::printf("       S_7 sweep: %zu records, %zu violations, %.0f ms\n", s7.records.size(), s7.violations.size(),
              sweep_ms);
  const double remaining = 300'000.0 - sweep_ms;

  const auto avoids = [](const Pattern& p) { return [&p](const StatRecord& r) { return !contains_pattern(r.w, p); }; };

  criterion(4, "re >= wk on S_7, equality iff {231,312}-avoiding", remaining, [&] {
    std::uint64_t below = 0;
    for (const auto& r : s7.records) below += r.ao < r.wk;
    const auto bad = iff_mismatches(s7, [](const StatRecord& r) { return r.ao == r.wk; },
                                    [](const StatRecord& r) { return avoids_all(r.w, patterns::layered()); });
    return Outcome{below == 0 && bad == 0,
                   "inequality failures=" + std::to_string(below) + " iff mismatches=" + std::to_string(bad)};
  });

  criterion(5, "wk <= prod(c_i+1) on S_7, equality iff 231-avoiding", remaining, [&] {
    std::uint64_t above = 0;
    for (const auto& r : s7.records) above += r.wk > r.prod;
    const auto bad = iff_mismatches(s7, [](const StatRecord& r) { return r.wk == r.prod; }, avoids(p231));
    return Outcome{above == 0 && bad == 0,
                   "inequality failures=" + std::to_string(above) + " iff mismatches=" + std::to_string(bad)};
  });

  criterion(6, "prod(c_i+1) <= rk on S_7, equality iff 312-avoiding", remaining, [&] {
    std::uint64_t above = 0;
    for (const auto& r : s7.records) above += r.prod > r.rk;
    const auto bad = iff_mismatches(s7, [](const StatRecord& r) { return r.prod == r.rk; }, avoids(p312));
    return Outcome{above == 0 && bad == 0,
                   "inequality failures=" + std::to_string(above) + " iff mismatches=" + std::to_string(bad)};
  });

  criterion(7, "re <= br on S_7, equality iff avoiding 4231, 35142, 42513, 351624", remaining, [&] {
    std::uint64_t above = 0;
    for (const auto& r : s7.records) above += r.ao > r.br;
    const auto bad = iff_mismatches(s7, [](const StatRecord& r) { return r.ao == r.br; },
                                    [](const StatRecord& r) { return avoids_all(r.w, patterns::defined_by_inclusions()); });
    // Permutations whose only obstruction is 351624 exercise the length-6 path.
    std::uint64_t only_long = 0;
    const std::vector<Pattern> shorter(patterns::defined_by_inclusions().begin(),
                                       patterns::defined_by_inclusions().end() - 1);
    for (const auto& r : s7.records) {
      only_long += avoids_all(r.w, shorter) && contains_pattern(r.w, Pattern::parse("351624"));
    }
    return Outcome{above == 0 && bad == 0 && only_long > 0,
                   "inequality failures=" + std::to_string(above) + " iff mismatches=" + std::to_string(bad) +
                       " length-6-only obstructions=" + std::to_string(only_long)};
  });

  criterion(8, "wk = br on S_7 iff {231,312}-avoiding", remaining, [&] {
    const auto bad = iff_mismatches(s7, [](const StatRecord& r) { return r.wk == r.br; },
                                    [](const StatRecord& r) { return avoids_all(r.w, patterns::layered()); });
    return Outcome{bad == 0, "iff mismatches=" + std::to_string(bad)};
  });

  criterion(9, "Weak Poincare polynomial = prod [c_i+1]_q for 231-avoiders in S_7", remaining, [&] {
    std::uint64_t avoiders = 0;
    std::uint64_t bad = 0;
    for (const auto& r : s7.records) {
      if (contains_pattern(r.w, p231)) continue;
      ++avoiders;
      bad += !(r.weak_poly && r.product_poly && *r.weak_poly == *r.product_poly);
    }
    return Outcome{bad == 0 && avoiders > 0,
                   std::to_string(avoiders) + " avoiders, " + std::to_string(bad) + " mismatches"};
  });

  criterion(10, "#{re = wk} = 2^(n-1) for n = 1..7, by statistics and by patterns", 300'000.0, [&] {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 7; ++n) {
      const SweepReport r = n == 7 ? SweepReport{} : sweep({.n = n, .depth = n <= 6 ? Depth::with_region_oracle : Depth::counts,
                                                            .parallelism = threads()});
      const SweepReport& rep = n == 7 ? s7 : r;
      std::uint64_t by_stats = 0;
      std::uint64_t by_patterns = 0;
      for (const auto& rec : rep.records) {
        by_stats += rec.regions_or_ao() == rec.wk;
        by_patterns += avoids_all(rec.w, patterns::layered());
      }
      const std::uint64_t expected = std::uint64_t{1} << (n - 1);
      ok = ok && by_stats == expected && by_patterns == expected && rep.violations.empty();
      detail += std::to_string(by_stats) + "/" + std::to_string(by_patterns) + (n < 7 ? " " : "");
    }
    return Outcome{ok, "stats/patterns per n: " + detail};
  });

  criterion(11, "Distance enumerator = Bruhat Poincare polynomial on S_6 iff {3412,4231}-avoiding", 120'000.0, [] {
    const BruhatTable table(6);
    std::uint64_t bad = 0;
    std::uint64_t equal = 0;
    std::size_t rank = 0;
    for (const Permutation& w : all_permutations(6)) {
      const bool same = distance_enumerator(w) == table.interval(rank++).poincare;
      equal += same;
      bad += same != avoids_all(w, patterns::smooth());
    }
    return Outcome{bad == 0, std::to_string(equal) + " equal, iff mismatches=" + std::to_string(bad)};
  });

  criterion(12, "Oracle equivalences (dominance, deletion-contraction, permanent, weak BFS)", 300'000.0, [] {
    const auto results = oracle_equivalences({.bruhat_max_n = 5,
                                              .orientation_max_n = 5,
                                              .random_graphs = 50,
                                              .rook_max_n = 6,
                                              .weak_max_n = 6,
                                              .region_max_n = 0});
    bool ok = results.size() == 4;
    std::string detail;
    for (const auto& r : results) {
      ok = ok && r.passed();
      detail += r.name + " " + std::to_string(r.cases - r.mismatches) + "/" + std::to_string(r.cases) + "; ";
    }
    return Outcome{ok, detail};
  });

  criterion(13, "Worked 231 reduction of 41382657", 1'000.0, [] {
    const Permutation w = parse_permutation("41382657");
    const auto r = witness_231_reduction(w);
    if (!r) return Outcome{false, "no witness"};
    std::string code;
    for (int c : lehmer_code(r->reduced).entries) code += (code.empty() ? "" : ",") + std::to_string(c);
    const std::string triple =
        std::to_string(r->triple[0]) + "," + std::to_string(r->triple[1]) + "," + std::to_string(r->triple[2]);
    const bool ok = triple == "1,4,5" && r->reduced.to_string() == "41325768" && code == "3,0,1,0,0,1,0,0" &&
                    code_monotone_check(r->reduced, w) && !weak_leq(r->reduced, w);
    return Outcome{ok, "triple=(" + triple + ") w'=" + r->reduced.to_string() + " c(w')=(" + code + ")"};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
