#include "flamingo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "flamingo/combinat.hpp"
#include "flamingo/diagrams.hpp"
#include "flamingo/error.hpp"
#include "flamingo/grassmann.hpp"
#include "flamingo/invariants.hpp"
#include "flamingo/parallel.hpp"
#include "flamingo/relations.hpp"
#include "flamingo/specht.hpp"
#include "flamingo/tableaux.hpp"

namespace flamingo {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail << "FAILED: " << what << "; ";
    ok = false;
  }
  void expect(bool condition, const std::string& what) {
    if (!condition) fail(what);
  }
};

int bound(const VerifyOptions& o, int default_n) { return o.n_max > 0 ? o.n_max : default_n; }

void report(const VerifyOptions& o, const std::string& line) {
  if (o.progress) o.progress(line);
}

struct MinorFactor {
  std::vector<int> rows;
  std::vector<int> cols;
};

MatrixPolynomial product_of(int n, int k, const std::vector<MinorFactor>& factors) {
  MatrixPolynomial p = MatrixPolynomial::constant(n, k, 1);
  for (const auto& f : factors) p = p * minor({f.rows, f.cols}, n, k);
  return p;
}

std::vector<std::vector<int>> row_sets(const JellyfishTableau& t) {
  std::vector<std::vector<int>> out;
  for (int j = 1; j <= t.context().d; ++j) out.push_back(t.rows_of_column(j));
  return out;
}

// Every ordered set partition of `elements` (any number of blocks).
std::vector<std::vector<Block>> ordered_partitions_of(const std::vector<int>& elements) {
  std::vector<std::vector<Block>> out;
  const int m = static_cast<int>(elements.size());
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  for (int d = 1; d <= m; ++d) {
    for (const auto& p : enumerate_ordered_partitions(m, d, 1)) {
      std::vector<Block> blocks;
      for (const Block& b : p.blocks()) {
        Block mapped;
        for (int v : b) mapped.push_back(elements[static_cast<std::size_t>(v - 1)]);
        blocks.push_back(std::move(mapped));
      }
      out.push_back(std::move(blocks));
    }
  }
  return out;
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& base, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > static_cast<int>(base.size())) return out;
  std::vector<char> mask(base.size(), 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  do {
    std::vector<int> s;
    for (std::size_t t = 0; t < base.size(); ++t) {
      if (mask[t]) s.push_back(base[t]);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::vector<int> complement(const std::vector<int>& base, const std::vector<int>& removed) {
  std::vector<int> out;
  std::set_difference(base.begin(), base.end(), removed.begin(), removed.end(), std::back_inserter(out));
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

void worked_example_r2(const VerifyOptions&, Check& c) {
  const auto pi = OrderedSetPartition::parse("2 3 6 10|5 7 8 9|1 4");
  const auto tableaux = enumerate_tableaux(pi, 2);
  c.expect(tableaux.size() == 6, "expected 6 tableaux, got " + std::to_string(tableaux.size()));
  std::vector<long> inv;
  for (const auto& t : tableaux) inv.push_back(t.inversions());
  c.expect(inv == std::vector<long>{8, 7, 6, 8, 7, 8}, "inversion counts differ from 8,7,6,8,7,8");
  const std::vector<int> block1{2, 3, 6, 10}, block2{5, 7, 8, 9}, block3{1, 4};
  const std::vector<std::pair<int, std::pair<std::vector<int>, std::vector<int>>>> expected_terms{
      {1, {{1, 2, 3, 4}, {1, 2, 5, 6}}},  {-1, {{1, 2, 3, 5}, {1, 2, 4, 6}}},
      {1, {{1, 2, 3, 6}, {1, 2, 4, 5}}},  {1, {{1, 2, 4, 5}, {1, 2, 3, 6}}},
      {-1, {{1, 2, 4, 6}, {1, 2, 3, 5}}}, {1, {{1, 2, 5, 6}, {1, 2, 3, 4}}},
  };
  std::vector<std::pair<int, MatrixPolynomial>> parts;
  for (std::size_t i = 0; i < expected_terms.size(); ++i) {
    const auto& [sign, rows] = expected_terms[i];
    if (i < tableaux.size()) {
      c.expect(tableaux[i].sign() == sign, "sign of tableau " + std::to_string(i + 1));
      c.expect(row_sets(tableaux[i]) ==
                   std::vector<std::vector<int>>{rows.first, rows.second, {1, 2}},
               "row sets of tableau " + std::to_string(i + 1));
    }
    parts.emplace_back(sign, product_of(10, 6, {{rows.first, block1}, {rows.second, block2}, {{1, 2}, block3}}));
  }
  const MatrixPolynomial expected = sum(10, 6, parts);
  const MatrixPolynomial got = jellyfish_invariant(pi, 2);
  c.expect(got == expected, "[pi]_2 differs from the six-term expansion");
  c.expect(jellyfish_invariant(pi, 3).is_zero(), "[pi]_3 is not zero");
  c.detail << "tableaux=" << tableaux.size() << " terms=" << got.size();
}

void worked_example_r3(const VerifyOptions&, Check& c) {
  const auto pi = OrderedSetPartition::parse("2 3 6 7 12|1 8 10|4 5 9 11");
  const auto tableaux = enumerate_tableaux(pi, 3);
  c.expect(tableaux.size() == 3, "expected 3 tableaux");
  const std::vector<std::pair<long, std::vector<std::vector<int>>>> expected_terms{
      {9, {{1, 2, 3, 4, 5}, {1, 2, 3}, {1, 2, 3, 6}}},
      {8, {{1, 2, 3, 4, 6}, {1, 2, 3}, {1, 2, 3, 5}}},
      {9, {{1, 2, 3, 5, 6}, {1, 2, 3}, {1, 2, 3, 4}}},
  };
  std::vector<std::pair<int, MatrixPolynomial>> parts;
  for (std::size_t i = 0; i < expected_terms.size(); ++i) {
    const auto& [inversions, rows] = expected_terms[i];
    if (i < tableaux.size()) {
      c.expect(tableaux[i].inversions() == inversions, "inversions of tableau " + std::to_string(i + 1));
      c.expect(row_sets(tableaux[i]) == rows, "row sets of tableau " + std::to_string(i + 1));
    }
    std::vector<MinorFactor> factors;
    for (int j = 1; j <= 3; ++j) factors.push_back({rows[static_cast<std::size_t>(j - 1)], pi.block(j)});
    parts.emplace_back(inversions % 2 == 0 ? 1 : -1, product_of(12, 6, factors));
  }
  c.expect(jellyfish_invariant(pi, 3) == sum(12, 6, parts), "[pi]_3 differs from the three-term expansion");
  c.detail << "tableaux=" << tableaux.size();
}

void worked_example_r1(const VerifyOptions&, Check& c) {
  const auto pi = OrderedSetPartition::parse("2 3 6 10|5 7 8 9|1 4");
  const auto tableaux = enumerate_tableaux(pi, 1);
  c.expect(tableaux.size() == 140, "expected 140 tableaux, got " + std::to_string(tableaux.size()));
  c.expect(tableau_count(pi, 1) == 140, "multinomial count differs from 140");
  const std::vector<std::pair<long, std::vector<std::vector<int>>>> displayed{
      {12, {{1, 2, 6, 7}, {1, 3, 4, 5}, {1, 8}}},
      {13, {{1, 3, 6, 7}, {1, 2, 4, 5}, {1, 8}}},
      {12, {{1, 5, 7, 8}, {1, 2, 3, 6}, {1, 4}}},
      {9, {{1, 4, 6, 7}, {1, 3, 5, 8}, {1, 2}}},
  };
  for (const auto& [inversions, rows] : displayed) {
    auto it = std::find_if(tableaux.begin(), tableaux.end(),
                           [&rows](const JellyfishTableau& t) { return row_sets(t) == rows; });
    if (it == tableaux.end()) {
      c.fail("a displayed tableau is missing");
      continue;
    }
    c.expect(it->inversions() == inversions, "inversion count " + std::to_string(it->inversions()) +
                                                 " instead of " + std::to_string(inversions));
    c.detail << "inv=" << it->inversions() << ";";
  }
}

// ---------------------------------------------------------------------------

void gc_equivalence(const VerifyOptions& o, Check& c) {
  // Worked expansion: the first cap and the full pullback.
  {
    const int n = 10;
    const Extensor left = Extensor::decomposable(n, {3, 4, 5, 6});
    const Extensor right = Extensor::decomposable(n, {7, 8, 9, 10, 12, 13, 16, 20});
    const Extensor first = cap(left, right);
    const std::vector<std::pair<int, std::vector<int>>> expected{
        {1, {5, 6}}, {-1, {4, 6}}, {1, {4, 5}}, {1, {3, 6}}, {-1, {3, 5}}, {1, {3, 4}}};
    c.expect(first.terms().size() == expected.size(), "first cap has the wrong number of terms");
    for (std::size_t i = 0; i < std::min(expected.size(), first.terms().size()); ++i) {
      c.expect(first.terms()[i].coeff == expected[i].first && first.terms()[i].indices == expected[i].second,
               "first cap term " + std::to_string(i + 1));
    }
    const auto pi = OrderedSetPartition::parse("2 3 6 10|5 7 8 9|1 4");
    const PlueckerExpression gc = gc_jellyfish(pi, 2);
    c.expect(gc.size() == 6, "worked expression has " + std::to_string(gc.size()) + " terms");
    // Each term as a map from column block to minor rows.
    using Shape = std::map<std::vector<int>, std::vector<int>>;
    std::set<Shape> gc_minors, tableau_minors;
    for (const auto& [factors, coeff] : gc.terms()) {
      Shape shape;
      for (const auto& k : factors) {
        const auto dm = delta_to_minor(k, n);
        shape[dm.minor.cols] = dm.minor.rows;
      }
      gc_minors.insert(shape);
    }
    for (const auto& t : enumerate_tableaux(pi, 2)) {
      Shape shape;
      for (int j = 1; j <= 3; ++j) shape[pi.block(j)] = t.rows_of_column(j);
      tableau_minors.insert(shape);
    }
    c.expect(gc_minors == tableau_minors, "worked expression terms do not match the tableaux");
    const auto sign = compare_up_to_sign(phi_star(gc), jellyfish_invariant(pi, 2));
    c.expect(sign.has_value(), "worked expression is not proportional to [pi]_2");
    c.detail << "worked sign=" << (sign ? *sign : 0) << "; ";
  }
  const int n_max = bound(o, 7);
  std::size_t total = 0;
  std::size_t predicted_agree = 0;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r; n <= n_max; ++n) {
      for (int d = 1; d * r <= n; ++d) {
        const auto parts = enumerate_ordered_partitions(n, d, r);
        std::vector<char> ok(parts.size(), 0), agree(parts.size(), 0);
        parallel_for(parts.size(), o.jobs, [&](std::size_t i) {
          const auto sign = compare_up_to_sign(phi_star(gc_jellyfish(parts[i], r)),
                                               jellyfish_invariant(parts[i], r));
          ok[i] = sign.has_value();
          agree[i] = sign && *sign == predicted_global_sign(parts[i], r);
        });
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (!ok[i]) c.fail("not proportional: " + parts[i].to_string() + " r=" + std::to_string(r));
          predicted_agree += agree[i];
        }
        total += parts.size();
      }
      report(o, "gc-equivalence r=" + std::to_string(r) + " n=" + std::to_string(n) + " done");
    }
  }
  c.detail << "partitions=" << total << " closed-form sign agreed on " << predicted_agree;
}

// ---------------------------------------------------------------------------

void recurrence(const VerifyOptions& o, Check& c) {
  const int n_max = bound(o, 7);
  std::atomic<std::size_t> instances{0};
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 2; n <= n_max; ++n) {
      const auto all = range(1, n);
      // Group instances by their prefix so the invariants sharing it are cached.
      std::vector<std::vector<Block>> prefixes;
      for (int m = 0; m <= n - r - 2; ++m) {
        for (const auto& elements : subsets_of_size(all, m)) {
          for (auto& p : ordered_partitions_of(elements)) prefixes.push_back(std::move(p));
        }
      }
      std::vector<std::string> failures(prefixes.size());
      parallel_for(prefixes.size(), o.jobs, [&](std::size_t i) {
        InvariantCache cache;
        std::vector<int> used;
        for (const Block& b : prefixes[i]) used.insert(used.end(), b.begin(), b.end());
        std::sort(used.begin(), used.end());
        const auto rest = complement(all, used);
        for (const auto& cset : subsets_of_size(rest, r)) {
          const auto ab = complement(rest, cset);
          for (int size_a = 1; size_a < static_cast<int>(ab.size()); ++size_a) {
            for (const auto& a : subsets_of_size(ab, size_a)) {
              const auto b = complement(ab, a);
              ++instances;
              if (!verify_recurrence(prefixes[i], a, b, cset, r, &cache) && failures[i].empty()) {
                failures[i] = recurrence_left(prefixes[i], a, b, cset).to_string();
              }
            }
          }
        }
      });
      for (const auto& f : failures) {
        if (!f.empty()) c.fail("recurrence fails at " + f + " r=" + std::to_string(r));
      }
      report(o, "recurrence r=" + std::to_string(r) + " n=" + std::to_string(n) + " done");
    }
  }
  std::size_t three_term = 0;
  for (int n = 3; n <= std::min(n_max, 6); ++n) {
    const auto all = range(1, n);
    for (int cv = 1; cv <= n; ++cv) {
      const auto ab = complement(all, {cv});
      for (int size_a = 1; size_a < n - 1; ++size_a) {
        for (const auto& a : subsets_of_size(ab, size_a)) {
          ++three_term;
          if (!verify_three_term(a, complement(ab, a), {cv})) c.fail("three-term relation fails");
        }
      }
    }
  }
  c.detail << "recurrence instances=" << instances.load() << " three-term instances=" << three_term;
}

// ---------------------------------------------------------------------------

void specht_membership(const VerifyOptions& o, Check& c) {
  const int n_max = bound(o, 7);
  std::size_t checked = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        const SpechtShape shape = SpechtShape::flamingo(n, d, r);
        const EchelonBasis basis = specht_basis(shape);
        const Integer dim = dimension(shape);
        c.expect(basis.rank() == dim, "spanning set rank differs from dimension for n=" + std::to_string(n) +
                                          " d=" + std::to_string(d) + " r=" + std::to_string(r));
        const auto parts = enumerate_ordered_partitions(n, d, r);
        std::vector<char> ok(parts.size(), 0);
        parallel_for(parts.size(), o.jobs, [&](std::size_t i) {
          ok[i] = basis.contains(jellyfish_invariant(parts[i], r));
        });
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (!ok[i]) c.fail("not in module: " + parts[i].to_string() + " r=" + std::to_string(r));
        }
        checked += parts.size();
      }
    }
    report(o, "membership n=" + std::to_string(n) + " done");
  }
  c.detail << "invariants=" << checked;
}

// ---------------------------------------------------------------------------

void equivariance(const VerifyOptions& o, Check& c) {
  const int n_max = bound(o, 6);
  std::size_t checked = 0;
  for (int n = 2; n <= n_max; ++n) {
    std::vector<Permutation> generators;
    for (int i = 1; i < n; ++i) generators.push_back(Permutation::simple_transposition(n, i));
    const Permutation cycle = Permutation::long_cycle(n);
    const Permutation longest = Permutation::longest_element(n);
    c.expect(cycle.sign() == (n % 2 == 1 ? 1 : -1), "sign of the long cycle");
    c.expect(longest.sign() == ((n * (n - 1) / 2) % 2 == 0 ? 1 : -1), "sign of the longest element");
    for (int r = 1; r <= n; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        const auto parts = enumerate_ordered_partitions(n, d, r);
        InvariantCache cache;
        std::vector<char> ok(parts.size(), 0);
        parallel_for(parts.size(), o.jobs, [&](std::size_t i) {
          const auto& pi = parts[i];
          const MatrixPolynomial p = *cache.get(pi, r);
          bool good = true;
          for (const auto& w : generators) {
            good = good && act_on_polynomial(w, p) == cache.get(act_elements(w, pi), r)->scaled(w.sign());
          }
          good = good && act_on_polynomial(cycle, p) == cache.get(rotate(pi), r)->scaled(cycle.sign());
          good = good && act_on_polynomial(longest, p) == cache.get(reflect(pi), r)->scaled(longest.sign());
          ok[i] = good;
        });
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (!ok[i]) c.fail("equivariance fails at " + parts[i].to_string() + " r=" + std::to_string(r));
        }
        checked += parts.size();
      }
    }
  }
  c.detail << "partitions=" << checked;
}

// ---------------------------------------------------------------------------

void independence(const VerifyOptions& o, Check& c) {
  const int n_max = bound(o, 8);
  std::size_t families = 0;
  for (int n = 2; n <= n_max; ++n) {
    for (int r = 2; r <= n; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        const auto nc = enumerate_noncrossing(n, d, r);
        std::vector<MatrixPolynomial> invariants(nc.size());
        parallel_for(nc.size(), o.jobs, [&](std::size_t i) { invariants[i] = jellyfish_invariant(nc[i], r); });
        const auto profile = exact_rank(invariants);
        const std::string where = " (n=" + std::to_string(n) + " d=" + std::to_string(d) + " r=" + std::to_string(r) + ")";
        c.expect(profile.rank == static_cast<int>(nc.size()), "rank deficit" + where);
        std::set<Monomial> leading;
        for (const auto& p : invariants) leading.insert(leading_monomial(p).first);
        c.expect(leading.size() == nc.size(), "repeated leading monomial" + where);
        ++families;
      }
    }
    report(o, "independence n=" + std::to_string(n) + " done");
  }
  c.detail << "families=" << families;
}

// ---------------------------------------------------------------------------

void hook_basis(const VerifyOptions& o, Check& c) {
  const int n_max = bound(o, 8);
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 1; d <= n; ++d) {
      const auto rep = verify_hook_basis(n, d);
      Integer binom = 1;
      for (int t = 1; t <= d - 1; ++t) binom = binom * (n - d + t) / t;
      c.expect(rep.family_size == binom, "family size differs from C(n-1,d-1)");
      c.expect(rep.holds(), "hook basis fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    report(o, "hook basis n=" + std::to_string(n) + " done");
  }
  c.detail << "n<=" << n_max;
}

// ---------------------------------------------------------------------------

void rotation_orbit_rank(const VerifyOptions&, Check& c) {
  const auto orbit = rotation_orbit(OrderedSetPartition::parse("1 2 3 5|4 6"));
  std::vector<MatrixPolynomial> invariants;
  for (const auto& p : orbit) invariants.push_back(jellyfish_invariant(p, 2));
  const int rank = exact_rank(invariants).rank;
  c.expect(orbit.size() == 6, "orbit size " + std::to_string(orbit.size()));
  c.expect(rank == 5, "rank " + std::to_string(rank));
  c.detail << "orbit=" << orbit.size() << " rank=" << rank;
}

// ---------------------------------------------------------------------------

void conjecture(const VerifyOptions& o, Check& c) {
  const int n_max = bound(o, 8);
  for (int n = 3; n <= n_max; ++n) {
    for (int d = 1; 3 * d <= n; ++d) {
      const auto family = conjecture_family(n, d, 3);
      c.expect(family == enumerate_noncrossing(n, d, 3), "r=3 family differs from the noncrossing partitions");
      const auto rep = verify_conjecture(n, d, 3);
      c.expect(rep.holds(), "r=3 dependence at n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  const int n4 = std::min(8, std::max(n_max, 8));
  const auto rep = verify_conjecture(n4, 2, 4);
  const auto nc = enumerate_noncrossing(n4, 2, 4);
  c.expect(rep.family_size > nc.size(), "r=4 family is no larger than the noncrossing set");
  c.expect(rep.holds(), "r=4 dependence");
  c.detail << "r=4 n=" << n4 << " d=2: |S|=" << rep.family_size << " rank=" << rep.rank
           << " (noncrossing " << nc.size() << ")";
}

// ---------------------------------------------------------------------------

void diagram_validation(const VerifyOptions& o, Check& c) {
  const int n_max = bound(o, 8);
  std::size_t checked = 0;
  std::string first_failure;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        for_each_ordered_partition(n, d, r, [&](const OrderedSetPartition& pi) {
          const TensorDiagram w = build_tensor_diagram(pi, r);
          const bool ok = validate(w).empty() && check_boundary_degrees(w, pi, r).empty() &&
                          unclasped_is_acyclic(w);
          if (!ok && first_failure.empty()) first_failure = pi.to_string() + " r=" + std::to_string(r);
          ++checked;
        });
      }
    }
    report(o, "diagrams n=" + std::to_string(n) + " done");
  }
  if (!first_failure.empty()) c.fail("invalid diagram for " + first_failure);
  c.detail << "diagrams=" << checked;
}

// ---------------------------------------------------------------------------

void sign_properties(const VerifyOptions& o, Check& c) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    IntMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) m.at(i, j) = entry(rng);
    }
    std::vector<int> pool = range(1, 2 * n);
    std::shuffle(pool.begin(), pool.end(), rng);
    IndexSet k(pool.begin(), pool.begin() + n);
    std::sort(k.begin(), k.end());
    const IntMatrix big = phi(m);
    IntMatrix sub(n, n);
    for (int i = 1; i <= n; ++i) {
      for (int t = 0; t < n; ++t) sub.at(i, t + 1) = big.at(i, k[static_cast<std::size_t>(t)]);
    }
    const DeltaMinor dm = delta_to_minor(k, n);
    if (determinant(sub) != dm.sign * evaluate(minor(dm.minor, n, n), m)) {
      c.fail("delta_to_minor mismatch");
    }
  }
  const int n_max = bound(o, 8);
  std::size_t colswap = 0, rearranged = 0;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r; n <= n_max; ++n) {
      for (int d = 1; d * r <= n; ++d) {
        const auto perms = Permutation::all(d);
        for (const auto& pi : enumerate_set_partitions(n, d, r)) {
          const auto tableaux = enumerate_tableaux(pi, r);
          for (const auto& sigma : perms) {
            const int factor = r % 2 == 1 ? sigma.sign() : 1;
            auto target = enumerate_tableaux(permute_blocks(sigma, pi), r);
            std::vector<std::vector<int>> images, expected;
            for (const auto& t : tableaux) {
              const JellyfishTableau moved = permute_columns(sigma, t);
              if (t.sign() != factor * moved.sign()) c.fail("column swap sign at " + pi.to_string());
              images.push_back(moved.tentacle_columns());
              ++colswap;
            }
            for (const auto& t : target) expected.push_back(t.tentacle_columns());
            std::sort(images.begin(), images.end());
            std::sort(expected.begin(), expected.end());
            if (images != expected) c.fail("column permutation is not a bijection at " + pi.to_string());
          }
          // Every rearrangement within columns keeps the column-permuted sign.
          for (const auto& t : tableaux) {
            const int sign = t.sign();
            TableauGrid grid = t.grid();
            std::vector<std::vector<int>> rows_of(static_cast<std::size_t>(d));
            for (int j = 1; j <= d; ++j) rows_of[static_cast<std::size_t>(j - 1)] = t.rows_of_column(j);
            std::vector<std::vector<int>> entries(static_cast<std::size_t>(d));
            for (int j = 1; j <= d; ++j) entries[static_cast<std::size_t>(j - 1)] = pi.block(j);
            // Odometer over the per-column permutations.
            for (;;) {
              for (std::size_t j = 0; j < entries.size(); ++j) {
                for (std::size_t t2 = 0; t2 < entries[j].size(); ++t2) {
                  grid[static_cast<std::size_t>(rows_of[j][t2] - 1)][j] = entries[j][t2];
                }
              }
              if (column_permuted_sign(grid) != sign) c.fail("within-column swap changed the sign");
              ++rearranged;
              std::size_t j = 0;
              while (j < entries.size() && !std::next_permutation(entries[j].begin(), entries[j].end())) ++j;
              if (j == entries.size()) break;
            }
          }
        }
      }
      report(o, "sign lemmas r=" + std::to_string(r) + " n=" + std::to_string(n) + " done");
    }
  }
  c.detail << "delta cases=500 column swaps=" << colswap << " rearrangements=" << rearranged;
}

struct CriterionSpec {
  const char* title;
  double budget_seconds;
  void (*run)(const VerifyOptions&, Check&);
};

const CriterionSpec kCriteria[kCriterionCount] = {
    {"worked-example-r2", 1, worked_example_r2},
    {"worked-example-r3", 1, worked_example_r3},
    {"worked-example-r1", 1, worked_example_r1},
    {"gc-equivalence", 300, gc_equivalence},
    {"recurrence", 600, recurrence},
    {"specht-membership", 600, specht_membership},
    {"equivariance", 120, equivariance},
    {"independence", 600, independence},
    {"hook-basis", 300, hook_basis},
    {"rotation-orbit", 1, rotation_orbit_rank},
    {"conjecture", 900, conjecture},
    {"diagram-validation", 60, diagram_validation},
    {"sign-properties", 300, sign_properties},
};

}  // namespace

std::string CriterionResult::summary() const {
  std::ostringstream os;
  os << (passed() ? "[PASS] " : "[FAIL] ") << id << ' ' << title << " (" << std::fixed
     << std::setprecision(2) << seconds << "s / " << std::setprecision(0) << budget_seconds << "s)";
  if (!within_budget) os << " over budget";
  if (!detail.empty()) os << ' ' << detail;
  return os.str();
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorKind::kInvalidParameters, "criterion id must be in 1.." + std::to_string(kCriterionCount));
  }
  const CriterionSpec& spec = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = spec.title;
  result.budget_seconds = spec.budget_seconds;
  Check check;
  const auto start = Clock::now();
  try {
    spec.run(options, check);
  } catch (const std::exception& e) {
    check.fail(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.checks_passed = check.ok;
  result.within_budget = options.n_max > 0 || result.seconds <= spec.budget_seconds;
  result.detail = check.detail.str();
  return result;
}

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace flamingo
