#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flamingo/combinat.hpp"
#include "flamingo/integer.hpp"
#include "flamingo/polyring.hpp"

namespace flamingo {

/// Sorted subset of [2n] naming columns of an n x 2n matrix.
using IndexSet = std::vector<int>;

/// [M_0 | M] with M_0 = diag(1, -1, 1, ...). M must be square.
IntMatrix phi(const IntMatrix& m);

/// ([n] \ I) u (J + n), ascending.
IndexSet delta_index_set(const std::vector<int>& rows, const std::vector<int>& cols, int n);

struct DeltaMinor {
  int sign = 1;  // Delta_K(Phi(M)) == sign * M_I^J
  MinorSpec minor;
  /// Whether sign equals (-1)^{|I|}.
  bool matches_size_parity = false;
};

/// Translates a Pluecker coordinate on Gr(n, 2n) into a signed minor of M by
/// Laplace expansion along the unit columns of M_0.
DeltaMinor delta_to_minor(const IndexSet& k, int n);

/// Integer combination of products of Pluecker coordinates. Each product is a
/// sorted list of index sets; equal products are merged and zeros dropped.
class PlueckerExpression {
 public:
  using Factors = std::vector<IndexSet>;

  PlueckerExpression() = default;
  explicit PlueckerExpression(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<Factors, Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * prod(factors); factors need not be sorted.
  void add(Factors factors, const Integer& coeff);

  std::string to_string() const;
  nlohmann::json to_json() const;

  bool operator==(const PlueckerExpression&) const = default;

 private:
  int n_ = 0;
  std::map<Factors, Integer> terms_;
};

/// One summand of an element of the exterior algebra carrying Pluecker factors:
/// coeff * prod(factors) * v_{indices}, with indices ascending.
struct ExtensorTerm {
  Integer coeff;
  IndexSet indices;
  std::vector<IndexSet> factors;
};

/// Homogeneous element of the exterior algebra of V = C^n whose coefficients
/// are products of Pluecker coordinates of the vectors v_1, ..., v_{2n}.
class Extensor {
 public:
  Extensor(int n, int degree) : n_(n), degree_(degree) {}
  /// v_{i_1} ^ ... ^ v_{i_k} for the given ordered list, sorted with sign.
  static Extensor decomposable(int n, const std::vector<int>& indices);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<ExtensorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(ExtensorTerm term);

 private:
  int n_;
  int degree_;
  std::vector<ExtensorTerm> terms_;
};

/// Meet of x in Lambda^{n-a} and y in Lambda^{n-b}: for each choice of b of
/// x's vectors in increasing position, the sign of (chosen, rest) times
/// det(chosen, y's vectors) times the wedge of the rest. Throws
/// kDegreeMismatch when deg x + deg y < n.
Extensor cap(const Extensor& x, const Extensor& y);

/// Exterior product; terms with a repeated vector vanish.
Extensor wedge(const Extensor& x, const Extensor& y);

/// Reads a top-degree extensor v_K as the Pluecker coordinate Delta_K.
PlueckerExpression top_degree_value(const Extensor& x);

/// (wedge_{i<d} v_S cap v_{E u (pi_i+n)}) ^ v_{E u (pi_d+n)}, expanded.
/// Throws kBlockTooSmall for undersized blocks.
PlueckerExpression gc_jellyfish(const OrderedSetPartition& pi, int r);

/// Pulls an expression back along Phi to a polynomial in the x_{ij}.
MatrixPolynomial phi_star(const PlueckerExpression& e);

/// Numeric value of the expression on the columns of an n x 2n matrix.
Integer evaluate(const PlueckerExpression& e, const IntMatrix& columns);

/// +1 when p == q, -1 when p == -q, nothing otherwise. Two zeros give +1.
std::optional<int> compare_up_to_sign(const MatrixPolynomial& p, const MatrixPolynomial& q);

/// (-1)^{inv(word(T_hat)) + (1/2) sum_i nu_i (nu - |pi_i|)} where T_hat fills the
/// tentacle rows top-down, column 1 first.
int predicted_global_sign(const OrderedSetPartition& pi, int r);

/// Exact integer determinant (Bareiss).
Integer determinant(const IntMatrix& m);

}  // namespace flamingo
