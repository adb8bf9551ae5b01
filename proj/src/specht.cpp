#include "flamingo/specht.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "flamingo/error.hpp"
#include "flamingo/invariants.hpp"

namespace flamingo {

// ---------------------------------------------------------------------------
// Shapes

std::vector<int> conjugate(const std::vector<int>& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return out;
  for (int c = 1; c <= lambda.front(); ++c) {
    int len = 0;
    for (int part : lambda) {
      if (part >= c) ++len;
    }
    out.push_back(len);
  }
  return out;
}

SpechtShape SpechtShape::flamingo(int n, int d, int r) {
  if (n < 1 || d < 1 || r < 1 || n < r * d) {
    throw Error(ErrorKind::kInvalidParameters, "flamingo shape needs 1 <= d, 1 <= r and r*d <= n");
  }
  if (n > Monomial::kMaxRow + (d - 1) * r) {
    throw Error(ErrorKind::kInvalidParameters, "too many rows for the polynomial representation");
  }
  SpechtShape s;
  s.n = n;
  s.d = d;
  s.r = r;
  s.lambda.assign(static_cast<std::size_t>(r), d);
  s.lambda.insert(s.lambda.end(), static_cast<std::size_t>(n - r * d), 1);
  s.mu = conjugate(s.lambda);
  return s;
}

SpechtShape SpechtShape::from_lambda(const std::vector<int>& lambda) {
  if (lambda.empty() || lambda.back() < 1 || !std::is_sorted(lambda.rbegin(), lambda.rend())) {
    throw Error(ErrorKind::kUnsupportedShape, "lambda must be a partition with positive parts");
  }
  const int d = lambda.front();
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (d == 1) return flamingo(n, 1, n);
  const int r = static_cast<int>(std::count(lambda.begin(), lambda.end(), d));
  for (std::size_t i = static_cast<std::size_t>(r); i < lambda.size(); ++i) {
    if (lambda[i] != 1) throw Error(ErrorKind::kUnsupportedShape, "only shapes (d^r, 1^m) are supported");
  }
  return flamingo(n, d, r);
}

Integer dimension(const std::vector<int>& lambda) {
  const auto conj = conjugate(lambda);
  Integer numerator = 1;
  Integer hooks = 1;
  int n = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      ++n;
      numerator *= n;
      const int arm = lambda[i] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return numerator / hooks;
}

// ---------------------------------------------------------------------------
// Spanning set

namespace {

std::vector<int> first_rows(int k) {
  std::vector<int> rows(static_cast<std::size_t>(k));
  std::iota(rows.begin(), rows.end(), 1);
  return rows;
}

// Splits `rest` into unordered blocks of size r, each block containing the
// smallest element not yet used, and calls visit for every split.
void split_equal_blocks(std::vector<int>& rest, int r, std::vector<std::vector<int>>& blocks,
                        const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (rest.empty()) {
    visit(blocks);
    return;
  }
  const int anchor = rest.front();
  std::vector<int> others(rest.begin() + 1, rest.end());
  const std::size_t pick = static_cast<std::size_t>(r - 1);
  std::vector<char> mask(others.size(), 0);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(pick), 1);
  do {
    std::vector<int> block{anchor};
    std::vector<int> remaining;
    for (std::size_t t = 0; t < others.size(); ++t) (mask[t] ? block : remaining).push_back(others[t]);
    blocks.push_back(block);
    split_equal_blocks(remaining, r, blocks, visit);
    blocks.pop_back();
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

}  // namespace

std::vector<MatrixPolynomial> spanning_set(const SpechtShape& shape) {
  const int n = shape.n;
  const int nu = shape.rows();
  const int r = shape.r;
  std::vector<MatrixPolynomial> out;
  auto emit = [&](const std::vector<int>& first, const std::vector<std::vector<int>>& others) {
    MatrixPolynomial p = minor({first_rows(nu), first}, n, nu);
    for (const auto& cols : others) p = p * minor({first_rows(r), cols}, n, nu);
    out.push_back(std::move(p));
  };
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  std::vector<std::vector<int>> blocks;
  if (shape.d == 1) {
    emit(all, {});
    return out;
  }
  if (nu == r) {
    split_equal_blocks(all, r, blocks, [&](const std::vector<std::vector<int>>& split) {
      emit(split.front(), std::vector<std::vector<int>>(split.begin() + 1, split.end()));
    });
    return out;
  }
  std::vector<char> mask(all.size(), 0);
  std::fill(mask.begin(), mask.begin() + nu, 1);
  do {
    std::vector<int> first;
    std::vector<int> rest;
    for (std::size_t t = 0; t < all.size(); ++t) (mask[t] ? first : rest).push_back(all[t]);
    split_equal_blocks(rest, r, blocks,
                       [&](const std::vector<std::vector<int>>& split) { emit(first, split); });
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Echelon basis

namespace {

template <typename Row>
Integer content(const Row& row) {
  Integer g = 0;
  for (const auto& e : row) {
    g = gcd(g, e.coeff);
    if (g == 1) break;
  }
  return g;
}

template <typename Row>
void make_primitive(Row& row) {
  if (row.empty()) return;
  Integer g = content(row);
  if (row.front().coeff < 0) g = -g;
  if (g == 1) return;
  for (auto& e : row) e.coeff /= g;
}

template <typename Row>
const Integer* coefficient_at(const Row& row, const TermKey& key) {
  auto it = std::lower_bound(row.begin(), row.end(), key,
                             [](const auto& e, const TermKey& k) { return e.key > k; });
  if (it != row.end() && it->key == key) return &it->coeff;
  return nullptr;
}

// a*x - b*y, both sorted by key descending.
template <typename Row>
Row combine(const Integer& a, const Row& x, const Integer& b, const Row& y) {
  Row out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j >= y.size() || (i < x.size() && x[i].key > y[j].key)) {
      out.push_back({x[i].key, x[i].monomial, a * x[i].coeff});
      ++i;
    } else if (i >= x.size() || y[j].key > x[i].key) {
      out.push_back({y[j].key, y[j].monomial, -(b * y[j].coeff)});
      ++j;
    } else {
      Integer c = a * x[i].coeff - b * y[j].coeff;
      if (c != 0) out.push_back({x[i].key, x[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Eliminates `row`'s coefficient at the pivot of `pivot_row`.
template <typename Row>
void eliminate(Row& row, const TermKey& key, const Row& pivot_row) {
  const Integer* b = coefficient_at(row, key);
  if (!b) return;
  const Integer& a = pivot_row.front().coeff;
  const Integer g = gcd(a, *b);
  const Integer scale_row = a / g;
  const Integer scale_pivot = *b / g;
  row = combine(scale_row, row, scale_pivot, pivot_row);
  make_primitive(row);
}

}  // namespace

EchelonBasis::Row EchelonBasis::to_row(const MatrixPolynomial& p) const {
  if (p.num_columns() != n_) throw Error(ErrorKind::kSizeMismatch, "polynomial over a different column count");
  Row row;
  row.reserve(p.size());
  for (const Term& t : p.terms()) row.push_back({term_key(t.monomial, n_), t.monomial, t.coeff});
  std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.key > b.key; });
  return row;
}

void EchelonBasis::reduce(Row& row) const {
  for (const auto& [key, pivot_row] : rows_) {
    if (row.empty()) return;
    if (row.front().key < key) continue;  // every key of row is below this pivot
    eliminate(row, key, pivot_row);
  }
}

bool EchelonBasis::insert(const MatrixPolynomial& p) {
  Row row = to_row(p);
  reduce(row);
  if (row.empty()) return false;
  make_primitive(row);
  const TermKey key = row.front().key;
  for (auto& [other_key, other] : rows_) eliminate(other, key, row);
  rows_.emplace(key, std::move(row));
  return true;
}

bool EchelonBasis::contains(const MatrixPolynomial& p) const {
  Row row = to_row(p);
  reduce(row);
  return row.empty();
}

std::vector<Monomial> EchelonBasis::pivots() const {
  std::vector<Monomial> out;
  for (const auto& [key, row] : rows_) out.push_back(row.front().monomial);
  return out;
}

RankProfile exact_rank(const std::vector<MatrixPolynomial>& polys) {
  RankProfile profile;
  profile.num_polynomials = polys.size();
  if (polys.empty()) return profile;
  const int n = polys.front().num_columns();
  std::set<Monomial> monomials;
  EchelonBasis basis(n);
  for (const auto& p : polys) {
    for (const Term& t : p.terms()) monomials.insert(t.monomial);
    basis.insert(p);
  }
  profile.num_monomials = monomials.size();
  profile.rank = basis.rank();
  profile.pivots = basis.pivots();
  return profile;
}

EchelonBasis specht_basis(const SpechtShape& shape) {
  EchelonBasis basis(shape.n);
  for (const auto& g : spanning_set(shape)) basis.insert(g);
  return basis;
}

bool membership_test(const MatrixPolynomial& p, const SpechtShape& shape) {
  return specht_basis(shape).contains(p);
}

// ---------------------------------------------------------------------------
// Hook family

std::vector<OrderedSetPartition> hook_family(int n, int d) {
  if (n < 1 || d < 1 || d > n) throw Error(ErrorKind::kInvalidParameters, "hook family needs 1 <= d <= n");
  std::vector<OrderedSetPartition> out;
  std::vector<char> mask(static_cast<std::size_t>(n - 1), 0);
  std::fill(mask.begin(), mask.begin() + (d - 1), 1);
  do {
    std::vector<int> starts{1};
    for (std::size_t t = 0; t < mask.size(); ++t) {
      if (mask[t]) starts.push_back(static_cast<int>(t) + 2);
    }
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < starts.size(); ++i) {
      const int end = i + 1 < starts.size() ? starts[i + 1] - 1 : n;
      Block b;
      for (int v = starts[i]; v <= end; ++v) b.push_back(v);
      blocks.push_back(std::move(b));
    }
    out.emplace_back(n, std::move(blocks));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

HookBasisReport verify_hook_basis(int n, int d) {
  HookBasisReport report;
  const auto family = hook_family(n, d);
  const SpechtShape shape = SpechtShape::flamingo(n, d, 1);
  const EchelonBasis module = specht_basis(shape);
  std::vector<MatrixPolynomial> invariants;
  report.all_members_in_module = true;
  for (const auto& pi : family) {
    invariants.push_back(jellyfish_invariant(pi, 1));
    if (!module.contains(invariants.back())) report.all_members_in_module = false;
  }
  report.family_size = family.size();
  report.rank = exact_rank(invariants).rank;
  report.dimension = dimension(shape);
  return report;
}

}  // namespace flamingo
