#include "invarr/verify.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "invarr/arrangement.hpp"
#include "invarr/inversions.hpp"
#include "invarr/oracles.hpp"
#include "invarr/patterns.hpp"
#include "invarr/rook.hpp"

namespace invarr {

Depth parse_depth(std::string_view text) {
  if (text == "counts") return Depth::counts;
  if (text == "polys") return Depth::polys;
  if (text == "with_region_oracle" || text == "with-region-oracle") return Depth::with_region_oracle;
  throw std::invalid_argument("unknown depth '" + std::string(text) + "'");
}

std::string_view to_string(Depth depth) {
  switch (depth) {
    case Depth::counts:
      return "counts";
    case Depth::polys:
      return "polys";
    case Depth::with_region_oracle:
      return "with_region_oracle";
  }
  return "counts";
}

namespace {

StatRecord build_record(const Permutation& w, Depth depth, const IntervalSummary& bruhat, bool run_regions) {
  StatRecord r(w);
  r.inv = inversion_count(w);
  r.code = lehmer_code(w);
  r.prod = code_product(w);
  const IntervalSummary weak = weak_interval(w);
  r.wk = weak.size;
  r.br = bruhat.size;
  r.ao = count_acyclic_orientations(inversion_graph(w));
  r.rk = rook_count(w);
  r.avoids_231_312 = avoids_all(w, patterns::layered());
  r.avoids_four = avoids_all(w, patterns::defined_by_inclusions());
  r.avoids_3412_4231 = avoids_all(w, patterns::smooth());

  if (depth != Depth::counts) {
    r.weak_poly = weak.poincare;
    r.bruhat_poly = bruhat.poincare;
    r.product_poly = product_q_formula(w);
  }
  if (run_regions && depth != Depth::counts) {
    const RegionSet rs = regions(w);
    r.distance_poly = distance_enumerator(rs);
    if (depth == Depth::with_region_oracle) r.re = rs.size();
  }
  return r;
}

std::string stats_line(const StatRecord& r) {
  std::ostringstream s;
  s << "wk=" << r.wk << " prod=" << r.prod << " rk=" << r.rk << " ao=" << r.ao << " br=" << r.br;
  if (r.re) s << " re=" << *r.re;
  return s.str();
}

void add_violation(std::vector<Violation>& out, const StatRecord& r, std::string check, std::string details) {
  out.push_back({std::move(check), std::move(details) + " [" + stats_line(r) + "]", r});
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

StatRecord stat_record(const Permutation& w, Depth depth) {
  if (w.size() > kStatRecordMaxSize) {
    throw std::invalid_argument("statistics are limited to n <= " + std::to_string(kStatRecordMaxSize));
  }
  return build_record(w, depth, bruhat_interval(w), true);
}

void check_record(const StatRecord& r, std::vector<Violation>& out) {
  const Permutation& w = r.w;
  const std::uint64_t re = r.regions_or_ao();
  const bool avoids_231 = !contains_pattern(w, Pattern::parse("231"));
  const bool avoids_312 = !contains_pattern(w, Pattern::parse("312"));

  // (a)
  if (!(r.wk <= r.prod && r.prod <= r.rk && r.rk == r.ao && r.ao <= r.br && r.wk <= r.br)) {
    add_violation(out, r, "chain", "expected wk <= prod <= rk = ao <= br");
  }
  if (r.re && *r.re != r.ao) add_violation(out, r, "regions_eq_ao", "region oracle disagrees with ao");
  // (b)
  if ((re == r.wk) != r.avoids_231_312) {
    add_violation(out, r, "re_eq_wk_iff_avoids_231_312",
                  std::string("re == wk is ") + yes_no(re == r.wk) + ", avoids {231,312} is " + yes_no(r.avoids_231_312));
  }
  // (c)
  if ((r.wk == r.prod) != avoids_231) {
    add_violation(out, r, "wk_eq_prod_iff_avoids_231",
                  std::string("wk == prod is ") + yes_no(r.wk == r.prod) + ", avoids 231 is " + yes_no(avoids_231));
  }
  // (d)
  if ((r.prod == r.rk) != avoids_312) {
    add_violation(out, r, "prod_eq_rk_iff_avoids_312",
                  std::string("prod == rk is ") + yes_no(r.prod == r.rk) + ", avoids 312 is " + yes_no(avoids_312));
  }
  // (e)
  if ((re == r.br) != r.avoids_four) {
    add_violation(out, r, "re_eq_br_iff_avoids_four",
                  std::string("re == br is ") + yes_no(re == r.br) + ", avoids the four patterns is " +
                      yes_no(r.avoids_four));
  }
  // (f)
  if ((r.wk == r.br) != r.avoids_231_312) {
    add_violation(out, r, "wk_eq_br_iff_avoids_231_312",
                  std::string("wk == br is ") + yes_no(r.wk == r.br) + ", avoids {231,312} is " + yes_no(r.avoids_231_312));
  }
  // (g)
  if (r.weak_poly && r.product_poly && avoids_231 && *r.weak_poly != *r.product_poly) {
    add_violation(out, r, "weak_poly_eq_product_poly",
                  "weak " + r.weak_poly->to_string() + " vs product " + r.product_poly->to_string());
  }
  // (h)
  if (r.distance_poly && r.bruhat_poly && ((*r.distance_poly == *r.bruhat_poly) != r.avoids_3412_4231)) {
    add_violation(out, r, "distance_eq_bruhat_iff_avoids_3412_4231",
                  "distance " + r.distance_poly->to_string() + " vs Bruhat " + r.bruhat_poly->to_string() +
                      ", avoids {3412,4231} is " + yes_no(r.avoids_3412_4231));
  }
  if (avoids_312 && !is_right_justified_ferrers(southwest_diagram(w))) {
    add_violation(out, r, "ferrers_if_avoids_312", "south-west diagram is not a right-justified Ferrers board");
  }
  const auto at_one_mismatch = [&](const std::optional<QPolynomial>& p, std::uint64_t expected, const char* name) {
    if (p && (p->at_one() != expected || p->degree() > r.inv || (*p)[0] != 1)) {
      add_violation(out, r, "poincare_sanity", std::string(name) + " polynomial " + p->to_string());
    }
  };
  at_one_mismatch(r.weak_poly, r.wk, "weak");
  at_one_mismatch(r.bruhat_poly, r.br, "Bruhat");
  at_one_mismatch(r.product_poly, r.prod, "product");
  if (r.distance_poly) at_one_mismatch(r.distance_poly, r.ao, "distance");
  if (r.weak_poly && r.weak_poly->degree() != r.inv) add_violation(out, r, "poincare_sanity", "weak degree != inv");
  if (r.bruhat_poly && r.bruhat_poly->degree() != r.inv) add_violation(out, r, "poincare_sanity", "Bruhat degree != inv");
}

std::vector<std::uint64_t> region_sample_ranks(int n, const SweepOptions& options) {
  const std::uint64_t total = factorial(n);
  std::vector<std::uint64_t> ranks;
  if (n <= options.region_full_max_n || options.region_sample >= total) {
    ranks.resize(total);
    for (std::uint64_t k = 0; k < total; ++k) ranks[k] = k;
    return ranks;
  }
  for (std::uint64_t k = 0; k < options.region_sample; ++k) ranks.push_back(k * total / options.region_sample);
  return ranks;
}

SweepReport sweep(const SweepOptions& options) {
  const int n = options.n;
  if (n < 1 || n > 8) throw std::invalid_argument("sweep size must be between 1 and 8");
  if (n == 8 && (options.depth != Depth::counts || !options.allow_long)) {
    throw std::invalid_argument("n = 8 requires depth counts and the long-running flag");
  }
  if (options.parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");

  const BruhatTable table(n);
  const std::vector<std::uint64_t> sample = region_sample_ranks(n, options);
  const std::uint64_t total = factorial(n);

  SweepReport report;
  report.n = n;
  report.depth = options.depth;
  report.records.resize(total, StatRecord(Permutation::identity(n)));

  // Contiguous rank shards, each written into its own slice of records.
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(options.parallelism, total));
  auto run_shard = [&](std::uint64_t begin, std::uint64_t end) {
    Permutation w = nth_permutation(n, begin);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      const bool regions_here = std::binary_search(sample.begin(), sample.end(), rank);
      report.records[rank] = build_record(w, options.depth, table.interval(rank), regions_here);
      next_lexicographic(w);
    }
  };
  if (workers == 1) {
    run_shard(0, total);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    {
      std::vector<std::jthread> pool;
      for (std::uint64_t k = 0; k < workers; ++k) {
        pool.emplace_back([&, k] {
          try {
            run_shard(k * total / workers, (k + 1) * total / workers);
          } catch (...) {
            failures[k] = std::current_exception();
          }
        });
      }
    }
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  auto& counts = report.class_counts;
  for (const char* key :
       {"re_eq_wk", "wk_eq_br", "wk_eq_prod", "prod_eq_rk", "re_eq_br", "avoids_231_312", "avoids_231", "avoids_312",
        "avoids_four", "avoids_3412_4231", "ferrers", "ferrers_containing_312"}) {
    counts[key] = 0;
  }
  if (options.depth != Depth::counts) {
    for (const char* key : {"region_oracle_records", "distance_eq_bruhat", "weak_poly_eq_product_poly",
                            "weak_poly_eq_product_poly_containing_231"}) {
      counts[key] = 0;
    }
  }
  const Pattern p231 = Pattern::parse("231");
  const Pattern p312 = Pattern::parse("312");
  for (const StatRecord& r : report.records) {
    check_record(r, report.violations);
    const std::uint64_t re = r.regions_or_ao();
    const bool avoids_231 = !contains_pattern(r.w, p231);
    const bool avoids_312 = !contains_pattern(r.w, p312);
    const bool ferrers = is_right_justified_ferrers(southwest_diagram(r.w));
    counts["re_eq_wk"] += re == r.wk;
    counts["wk_eq_br"] += r.wk == r.br;
    counts["wk_eq_prod"] += r.wk == r.prod;
    counts["prod_eq_rk"] += r.prod == r.rk;
    counts["re_eq_br"] += re == r.br;
    counts["avoids_231_312"] += r.avoids_231_312;
    counts["avoids_231"] += avoids_231;
    counts["avoids_312"] += avoids_312;
    counts["avoids_four"] += r.avoids_four;
    counts["avoids_3412_4231"] += r.avoids_3412_4231;
    counts["ferrers"] += ferrers;
    counts["ferrers_containing_312"] += ferrers && !avoids_312;
    if (options.depth != Depth::counts) {
      const bool weak_eq_product = *r.weak_poly == *r.product_poly;
      counts["weak_poly_eq_product_poly"] += weak_eq_product;
      counts["weak_poly_eq_product_poly_containing_231"] += weak_eq_product && !avoids_231;
      if (r.distance_poly) {
        counts["region_oracle_records"] += 1;
        counts["distance_eq_bruhat"] += *r.distance_poly == *r.bruhat_poly;
      }
    }
  }
  return report;
}

std::vector<EquivalenceResult> oracle_equivalences(const OracleCheckOptions& options) {
  std::vector<EquivalenceResult> results;
  const auto note = [](EquivalenceResult& res, bool ok, const std::string& what) {
    ++res.cases;
    if (!ok) {
      if (res.mismatches == 0) res.first_mismatch = what;
      ++res.mismatches;
    }
  };

  if (options.bruhat_max_n > 0) {
    EquivalenceResult res("bruhat_dominance_vs_chains");
    for (int n = 1; n <= options.bruhat_max_n; ++n) {
      for (const Permutation& w : all_permutations(n)) {
        const auto down = oracle::bruhat_down_set_by_chains(w);
        for (const Permutation& u : all_permutations(n)) {
          const bool by_chains = std::binary_search(down.begin(), down.end(), u);
          note(res, bruhat_leq(u, w) == by_chains, u.to_string() + " <= " + w.to_string());
        }
      }
    }
    results.push_back(res);
  }

  if (options.orientation_max_n > 0 || options.random_graphs > 0) {
    EquivalenceResult res("deletion_contraction_vs_orientation_enumeration");
    for (int n = 1; n <= options.orientation_max_n; ++n) {
      for (const Permutation& w : all_permutations(n)) {
        const InversionGraph g = inversion_graph(w);
        if (g.edge_count() > 16) continue;
        note(res, count_acyclic_orientations(g) == oracle::acyclic_orientations_by_enumeration(g),
             "G_" + w.to_string());
      }
    }
    int index = 0;
    for (const InversionGraph& g : oracle::seeded_random_graphs(options.random_graphs, 8, 16, 20171)) {
      note(res, count_acyclic_orientations(g) == oracle::acyclic_orientations_by_enumeration(g),
           "random graph #" + std::to_string(index++));
    }
    results.push_back(res);
  }

  if (options.rook_max_n > 0) {
    EquivalenceResult res("permanent_vs_backtracking");
    for (int n = 1; n <= options.rook_max_n; ++n) {
      for (const Permutation& w : all_permutations(n)) {
        const Board allowed = southwest_diagram(w).complement();
        note(res, board_permanent(allowed) == oracle::rook_placements_by_backtracking(allowed), w.to_string());
      }
    }
    results.push_back(res);
  }

  if (options.weak_max_n > 0) {
    EquivalenceResult res("weak_bfs_vs_subset_filter");
    for (int n = 1; n <= options.weak_max_n; ++n) {
      for (const Permutation& w : all_permutations(n)) {
        const IntervalSummary bfs = weak_interval(w);
        const auto filtered = oracle::weak_interval_by_filter(w);
        note(res, bfs.size == filtered.size && bfs.poincare == filtered.poincare, w.to_string());
      }
    }
    results.push_back(res);
  }

  if (options.region_max_n > 0) {
    EquivalenceResult res("regions_vs_acyclic_orientations");
    for (int n = 1; n <= options.region_max_n; ++n) {
      for (const Permutation& w : all_permutations(n)) {
        note(res, regions(w).size() == count_acyclic_orientations(inversion_graph(w)), w.to_string());
      }
    }
    results.push_back(res);
  }
  return results;
}

}  // namespace invarr
