#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "flamingo/combinat.hpp"
#include "flamingo/diagrams.hpp"
#include "flamingo/grassmann.hpp"
#include "flamingo/invariants.hpp"
#include "flamingo/relations.hpp"
#include "flamingo/specht.hpp"
#include "flamingo/tableaux.hpp"
#include "oracles.hpp"

using namespace flamingo;

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  do {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) {
      if (mask[static_cast<std::size_t>(i - 1)]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

Integer column_minor(const IntMatrix& big, const std::vector<int>& rows, const std::vector<int>& cols) {
  return oracle::laplace_det(oracle::submatrix(big, rows, cols));
}

// Coordinates of an extensor, evaluated on the columns of `big`, in the basis
// e_R of the exterior power (R ranging over row subsets).
std::vector<Integer> coordinates(const Extensor& e, const IntMatrix& big) {
  const int n = big.rows();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  std::vector<Integer> out;
  for (const auto& rows : subsets(n, e.degree())) {
    Integer total = 0;
    for (const auto& t : e.terms()) {
      Integer term = t.coeff;
      for (const auto& k : t.factors) term *= column_minor(big, all, k);
      term *= column_minor(big, rows, t.indices);
      total += term;
    }
    out.push_back(total);
  }
  return out;
}

MatrixPolynomial random_polynomial(std::mt19937_64& rng, int n, int k, std::uint64_t columns) {
  std::vector<Term> terms;
  for (int t = 0; t < 4; ++t) {
    std::vector<int> rows(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
      if ((columns >> (j - 1)) & 1) rows[static_cast<std::size_t>(j - 1)] = 1 + static_cast<int>(rng() % k);
    }
    terms.push_back({Monomial::from_rows(rows), static_cast<int>(rng() % 7) - 3});
  }
  return MatrixPolynomial(n, k, terms);
}

}  // namespace

// ---------------------------------------------------------------------------
// combinatorics

TEST(Properties, DihedralRelationAndNoncrossingInvariance) {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (const auto& pi : enumerate_set_partitions(n, d, 1)) {
        ASSERT_EQ(rotate(reflect(rotate(pi))), reflect(pi));
        ASSERT_EQ(is_noncrossing(rotate(pi)), is_noncrossing(pi));
        ASSERT_EQ(is_noncrossing(reflect(pi)), is_noncrossing(pi));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// tableaux

TEST(Properties, TableauCountUpToTen) {
  std::mt19937_64 rng(41);
  for (int n = 8; n <= 10; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (int d = 2; d * r <= n && d <= 3; ++d) {
        const auto parts = enumerate_ordered_partitions(n, d, r);
        for (int sample = 0; sample < 5; ++sample) {
          const auto& pi = parts[rng() % parts.size()];
          const auto list = enumerate_tableaux(pi, r);
          ASSERT_EQ(list.size(), oracle::tableau_row_sets(pi, r).size()) << pi.to_string();
          ASSERT_EQ(tableau_count(pi, r), Integer(list.size()));
        }
      }
    }
  }
}

TEST(Properties, MinorProductIsMultilinear) {
  const auto pi = OrderedSetPartition::parse("2 3 6 10|5 7 8 9|1 4");
  for (int r = 1; r <= 2; ++r) {
    for (const auto& t : enumerate_tableaux(pi, r)) {
      const auto product = minor_product(t);
      for (const auto& term : product.terms()) ASSERT_EQ(term.monomial.degree(), 10);
    }
  }
}

// ---------------------------------------------------------------------------
// polynomial ring

TEST(Properties, RingAxioms) {
  std::mt19937_64 rng(43);
  const int n = 6, k = 3;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_polynomial(rng, n, k, 0b000011);
    const auto b = random_polynomial(rng, n, k, 0b001100);
    const auto c = random_polynomial(rng, n, k, 0b110000);
    const auto c2 = random_polynomial(rng, n, k, 0b110000);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (c + c2), a * c + a * c2);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) - b, a);
  }
}

TEST(Properties, TermOrderIsTotal) {
  const int n = 3;
  std::vector<Monomial> all;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) all.push_back(Monomial::from_rows({a, b, c}));
  for (const auto& x : all) {
    for (const auto& y : all) {
      const auto xy = term_compare(x, y, n);
      ASSERT_EQ(xy == std::strong_ordering::equal, x == y);
      ASSERT_EQ(term_compare(y, x, n), 0 <=> xy);
      for (const auto& z : all) {
        if (xy > 0 && term_compare(y, z, n) > 0) {
          ASSERT_TRUE(term_compare(x, z, n) > 0);
        }
      }
    }
  }
}

TEST(Properties, LeadingMonomialIsMultiplicative) {
  const int n = 6, k = 3;
  const std::vector<std::vector<int>> left_cols{{1, 3}, {1, 2}, {2, 6}}, right_cols{{2, 4, 5}, {3, 4, 6}, {1, 3, 4}};
  for (std::size_t i = 0; i < left_cols.size(); ++i) {
    for (const auto& rows_p : subsets(k, 2)) {
      for (const auto& rows_q : subsets(k, 3)) {
        const auto p = minor({rows_p, left_cols[i]}, n, k);
        const auto q = minor({rows_q, right_cols[i]}, n, k);
        const auto lp = leading_monomial(p).first, lq = leading_monomial(q).first;
        ASSERT_EQ(leading_monomial(p * q).first, Monomial::from_packed(lp.packed() | lq.packed()));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// invariants

TEST(Properties, InvariantRowSupport) {
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        const auto parts = enumerate_ordered_partitions(n, d, r);
        for (std::size_t i = 0; i < parts.size(); i += 1 + parts.size() / 20) {
          const auto ctx = FlamingoContext::of(parts[i], r);
          const auto invariant = jellyfish_invariant(parts[i], r);
          for (const auto& term : invariant.terms()) {
            ASSERT_EQ(term.monomial.degree(), n);
            std::vector<int> uses(static_cast<std::size_t>(ctx.nu + 1), 0);
            for (int j = 1; j <= n; ++j) {
              const int row = term.monomial.row(j);
              ASSERT_GE(row, 1);
              ASSERT_LE(row, ctx.nu);
              ++uses[static_cast<std::size_t>(row)];
            }
            for (int row = 1; row <= ctx.nu; ++row) ASSERT_EQ(uses[static_cast<std::size_t>(row)], row <= r ? d : 1);
          }
        }
      }
    }
  }
}

TEST(Properties, EquivarianceForGeneratorsUpToSeven) {
  const int n = 7;
  std::vector<Permutation> generators{Permutation::long_cycle(n), Permutation::longest_element(n)};
  for (int i = 1; i < n; ++i) generators.push_back(Permutation::simple_transposition(n, i));
  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; d * r <= n; ++d) {
      InvariantCache cache;
      for (const auto& pi : enumerate_ordered_partitions(n, d, r)) {
        const auto p = cache.get(pi, r);
        for (const auto& w : generators) {
          ASSERT_EQ(act_on_polynomial(w, *p), cache.get(act_elements(w, pi), r)->scaled(w.sign()))
              << pi.to_string() << " r=" << r;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Grassmann side

TEST(Properties, CapCommutesUpToSign) {
  std::mt19937_64 rng(47);
  const int n = 4;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> pool(2 * n);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    const int a = 1 + static_cast<int>(rng() % n);
    const int b = n - a + static_cast<int>(rng() % a) + 1;
    const auto x = Extensor::decomposable(n, std::vector<int>(pool.begin(), pool.begin() + a));
    const auto y = Extensor::decomposable(n, std::vector<int>(pool.begin() + a, pool.begin() + a + std::min(b, 2 * n - a)));
    if (x.degree() + y.degree() < n) continue;
    const IntMatrix big = oracle::random_matrix(n, 2 * n, rng);
    const auto xy = coordinates(cap(x, y), big);
    const auto yx = coordinates(cap(y, x), big);
    ASSERT_EQ(xy.size(), yx.size());
    const bool same = xy == yx;
    std::vector<Integer> negated;
    for (const auto& v : yx) negated.push_back(-v);
    ASSERT_TRUE(same || xy == negated);
  }
}

TEST(Properties, CapIsAssociativeOnComplementaryDegrees) {
  std::mt19937_64 rng(53);
  const int n = 3;
  for (int trial = 0; trial < 20; ++trial) {
    // (x cap y) cap z and x cap (y cap z) with degrees 2, 2, 2 in dimension 3.
    std::vector<int> pool(2 * n);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto x = Extensor::decomposable(n, {pool[0], pool[1]});
    const auto y = Extensor::decomposable(n, {pool[2], pool[3]});
    const auto z = Extensor::decomposable(n, {pool[4], pool[5]});
    const IntMatrix big = oracle::random_matrix(n, 2 * n, rng);
    const auto left = coordinates(cap(cap(x, y), z), big);
    const auto right = coordinates(cap(x, cap(y, z)), big);
    std::vector<Integer> negated;
    for (const auto& v : right) negated.push_back(-v);
    ASSERT_TRUE(left == right || left == negated);
  }
}

TEST(Properties, PhiHasFullRank) {
  std::mt19937_64 rng(59);
  for (int n = 1; n <= 6; ++n) {
    const IntMatrix big = phi(oracle::random_matrix(n, n, rng));
    std::vector<int> first(static_cast<std::size_t>(n));
    std::iota(first.begin(), first.end(), 1);
    EXPECT_NE(column_minor(big, first, first), 0);
  }
}

TEST(Properties, DeltaToMinorExhaustiveAtSix) {
  std::mt19937_64 rng(61);
  const int n = 6;
  const IntMatrix m = oracle::random_matrix(n, n, rng);
  const IntMatrix big = phi(m);
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (const auto& k : subsets(2 * n, n)) {
    const auto dm = delta_to_minor(k, n);
    ASSERT_EQ(column_minor(big, all, k), dm.sign * evaluate(minor(dm.minor, n, n), m));
  }
}

TEST(Properties, NumericEquivalenceWithConstantSign) {
  std::mt19937_64 rng(67);
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r <= 2; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        const auto parts = enumerate_ordered_partitions(n, d, r);
        for (std::size_t i = 0; i < parts.size(); i += 1 + parts.size() / 10) {
          const auto gc = gc_jellyfish(parts[i], r);
          int sign = 0;
          for (int trial = 0; trial < 3; ++trial) {
            const IntMatrix m = oracle::random_matrix(n, n, rng);
            const Integer lhs = evaluate(gc, phi(m));
            const Integer rhs = oracle::invariant_value(parts[i], r, m);
            ASSERT_TRUE(lhs == rhs || lhs == -rhs) << parts[i].to_string();
            if (rhs != 0) {
              const int s = lhs == rhs ? 1 : -1;
              ASSERT_TRUE(sign == 0 || sign == s);
              sign = s;
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// diagrams

TEST(Properties, DiagramWeightBookkeeping) {
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r <= 2; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        for (const auto& pi : enumerate_set_partitions(n, d, r)) {
          const auto w = build_tensor_diagram(pi, r);
          int interior_sum = 0, inner = 0, outer = 0;
          for (const auto& v : w.vertices) {
            if (!v.boundary) interior_sum += w.weight_at(v.id);
          }
          for (const auto& e : w.edges) {
            const bool fb = w.find(e.from)->boundary, tb = w.find(e.to)->boundary;
            if (!fb && !tb) inner += e.weight;
            else outer += e.weight;
          }
          ASSERT_EQ(interior_sum, 2 * inner + outer);
          ASSERT_EQ(interior_sum % n, 0);
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Specht modules

TEST(Properties, LeadingMonomialUsesBlockExtremes) {
  for (int n = 4; n <= 8; ++n) {
    for (int r = 2; r <= 3; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        for (const auto& pi : enumerate_noncrossing(n, d, r)) {
          const auto lm = leading_monomial(jellyfish_invariant(pi, r)).first;
          for (const auto& block : pi.blocks()) {
            ASSERT_EQ(lm.row(block.front()), 1) << pi.to_string();
            ASSERT_EQ(lm.row(block.back()), 2) << pi.to_string();
          }
          int row_one = 0, row_two = 0;
          for (int j = 1; j <= n; ++j) {
            row_one += lm.row(j) == 1;
            row_two += lm.row(j) == 2;
          }
          ASSERT_EQ(row_one, d);
          ASSERT_EQ(row_two, d);
        }
      }
    }
  }
}

TEST(Properties, ModuleIsPermutationInvariant) {
  const auto shape = SpechtShape::flamingo(6, 2, 2);
  const auto basis = specht_basis(shape);
  std::mt19937_64 rng(71);
  const auto perms = Permutation::all(6);
  for (const auto& pi : enumerate_noncrossing(6, 2, 2)) {
    const auto p = jellyfish_invariant(pi, 2);
    ASSERT_TRUE(basis.contains(p));
    for (int trial = 0; trial < 5; ++trial) {
      ASSERT_TRUE(basis.contains(act_on_polynomial(perms[rng() % perms.size()], p)));
    }
  }
}

// ---------------------------------------------------------------------------
// relations

TEST(Properties, RecurrenceOnRandomLargerInstances) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 2);
    const int r = 1 + static_cast<int>(rng() % 3);
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    std::shuffle(elems.begin(), elems.end(), rng);
    Block c(elems.begin(), elems.begin() + r);
    const int rest = n - r;
    const int size_a = 1 + static_cast<int>(rng() % (rest - 2));
    const int size_b = 1 + static_cast<int>(rng() % (rest - size_a - 1));
    Block a(elems.begin() + r, elems.begin() + r + size_a);
    Block b(elems.begin() + r + size_a, elems.begin() + r + size_a + size_b);
    Block prefix(elems.begin() + r + size_a + size_b, elems.end());
    for (Block* s : {&a, &b, &c, &prefix}) std::sort(s->begin(), s->end());
    std::vector<Block> prefix_blocks;
    if (!prefix.empty()) prefix_blocks.push_back(prefix);
    ASSERT_TRUE(verify_recurrence(prefix_blocks, a, b, c, r));
  }
}
