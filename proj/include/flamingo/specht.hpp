#pragma once

#include <map>
#include <vector>

#include "flamingo/combinat.hpp"
#include "flamingo/integer.hpp"
#include "flamingo/polyring.hpp"

namespace flamingo {

/// lambda = (d^r, 1^{n-rd}) with its conjugate mu = (nu, r^{d-1}).
struct SpechtShape {
  int n = 0;
  int d = 0;
  int r = 0;
  std::vector<int> lambda;
  std::vector<int> mu;

  static SpechtShape flamingo(int n, int d, int r);
  /// Accepts any lambda of the flamingo form (hooks and rectangles included);
  /// throws kUnsupportedShape otherwise.
  static SpechtShape from_lambda(const std::vector<int>& lambda);

  /// Rows of the variable universe: nu = mu_1.
  int rows() const { return mu.front(); }
};

/// Conjugate of a partition given as weakly decreasing positive parts.
std::vector<int> conjugate(const std::vector<int>& lambda);

/// Products M^{J_1}_{[nu]} prod_{i>=2} M^{J_i}_{[r]} over all splits of [n]
/// into column sets of sizes mu, one per unordered choice within equal sizes.
std::vector<MatrixPolynomial> spanning_set(const SpechtShape& shape);

/// Number of standard Young tableaux of shape lambda, n! / prod(hooks).
Integer dimension(const std::vector<int>& lambda);
inline Integer dimension(const SpechtShape& shape) { return dimension(shape.lambda); }

/// Row space of integer polynomials kept in reduced echelon form with
/// fraction-free updates. Columns are monomials ordered by term_compare and
/// each basis row is keyed by its leading monomial; every pivot monomial
/// occurs in exactly one basis row.
class EchelonBasis {
 public:
  explicit EchelonBasis(int n) : n_(n) {}

  /// Adds p to the spanning set; returns true when the rank grew.
  bool insert(const MatrixPolynomial& p);
  /// Whether p lies in the span.
  bool contains(const MatrixPolynomial& p) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  /// Pivot monomials, largest first.
  std::vector<Monomial> pivots() const;

 private:
  struct Entry {
    TermKey key;
    Monomial monomial;
    Integer coeff;
  };
  using Row = std::vector<Entry>;  // sorted by key, descending

  Row to_row(const MatrixPolynomial& p) const;
  // Clears the coefficient of `row` at every existing pivot.
  void reduce(Row& row) const;

  int n_;
  std::map<TermKey, Row, std::greater<>> rows_;
};

struct RankProfile {
  std::size_t num_polynomials = 0;
  std::size_t num_monomials = 0;
  int rank = 0;
  std::vector<Monomial> pivots;  // largest first
};

/// Rank over Q of the coefficient matrix (rows = polynomials, columns =
/// monomials). Pivots are the leading monomials of the row space.
RankProfile exact_rank(const std::vector<MatrixPolynomial>& polys);

/// Basis of the span of the shape's spanning set.
EchelonBasis specht_basis(const SpechtShape& shape);

/// Whether p lies in the span of spanning_set(shape).
bool membership_test(const MatrixPolynomial& p, const SpechtShape& shape);

/// For each P in {2..n} of size d-1 (lexicographic), the interval partition
/// whose blocks start at {1} u P.
std::vector<OrderedSetPartition> hook_family(int n, int d);

struct HookBasisReport {
  std::size_t family_size = 0;
  int rank = 0;
  Integer dimension = 0;
  bool all_members_in_module = false;
  bool holds() const { return rank == dimension && family_size == static_cast<std::size_t>(rank) && all_members_in_module; }
};

HookBasisReport verify_hook_basis(int n, int d);

}  // namespace flamingo
