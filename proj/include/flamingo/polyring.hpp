#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flamingo/integer.hpp"

namespace flamingo {

/// A squarefree monomial in the entries x_{ij} of a matrix, multilinear in the
/// column index: each column j carries at most one variable x_{row(j), j}.
///
/// Packed as 4 bits per column (row 0 = column absent), so n <= 16 columns and
/// rows <= 15.
class Monomial {
 public:
  static constexpr int kMaxColumns = 16;
  static constexpr int kMaxRow = 15;

  constexpr Monomial() = default;
  static constexpr Monomial from_packed(std::uint64_t packed) {
    Monomial m;
    m.packed_ = packed;
    return m;
  }
  /// rows[j-1] is the row used by column j, 0 when absent.
  static Monomial from_rows(const std::vector<int>& rows);

  /// Row of the variable in column `col` (1-based); 0 when the column is absent.
  int row(int col) const {
    return static_cast<int>((packed_ >> (4 * (col - 1))) & 0xFu);
  }
  void set_row(int col, int row);

  std::uint64_t packed() const { return packed_; }
  /// One bit (the low bit of each nibble) per present column.
  std::uint64_t support() const;
  int degree() const;
  std::vector<int> rows(int n) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::uint64_t packed_ = 0;
};

struct Term {
  Monomial monomial;
  Integer coeff;

  bool operator==(const Term&) const = default;
};

/// M_I^J: the determinant of the rows I and columns J (both ascending).
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;

  bool operator==(const MinorSpec&) const = default;
};

/// Exact integer matrix, row-major, used for numeric evaluation.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 1-based access.
  Integer& at(int i, int j) { return data_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))]; }
  const Integer& at(int i, int j) const {
    return data_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

/// Integer-coefficient polynomial in the variables x_{ij}, 1 <= i <= k,
/// 1 <= j <= n. Terms are kept sorted by packed monomial with no zero
/// coefficients, so equality is structural. `k` records the row universe and
/// does not take part in equality.
class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;
  MatrixPolynomial(int n, int k);
  /// Takes arbitrary terms; merges duplicates and drops zeros.
  MatrixPolynomial(int n, int k, std::vector<Term> terms);

  static MatrixPolynomial constant(int n, int k, Integer value);
  static MatrixPolynomial variable(int n, int k, int row, int col);

  int num_columns() const { return n_; }
  int num_rows() const { return k_; }
  void set_num_rows(int k) { k_ = k; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(Monomial m) const;

  MatrixPolynomial& operator+=(const MatrixPolynomial& other);
  MatrixPolynomial& operator-=(const MatrixPolynomial& other);
  MatrixPolynomial operator-() const;
  MatrixPolynomial scaled(const Integer& factor) const;

  friend MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b) { return a += b; }
  friend MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b) { return a -= b; }
  /// Product of polynomials; throws kColumnCollision when two monomials share a
  /// column, since every product in this library joins disjoint column sets.
  friend MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b);

  bool operator==(const MatrixPolynomial& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const MatrixPolynomial& other) const;

  int n_ = 0;
  int k_ = 0;
  std::vector<Term> terms_;
};

/// Signed sum of polynomials, merged once at the end.
MatrixPolynomial sum(int n, int k, const std::vector<std::pair<int, MatrixPolynomial>>& signed_terms);

/// Leibniz expansion of M_I^J; the empty minor is the constant 1.
MatrixPolynomial minor(const MinorSpec& spec, int n, int k);

/// Lexicographic term order on the variable sequence
///   x_{1,1} > ... > x_{1,n} > x_{2,n} > ... > x_{2,1} > x_{3,1} > ... > x_{3,n} > x_{4,1} > ...
/// (row 2 reversed, every other row ascending by column).
std::strong_ordering term_compare(Monomial a, Monomial b, int n);

/// Bit string of a monomial in the variable order above, most significant
/// first, so that comparing keys lexicographically is term_compare.
using TermKey = std::array<std::uint64_t, 4>;
TermKey term_key(Monomial m, int n);

/// Largest monomial under term_compare with its coefficient. Throws
/// kZeroPolynomial for the zero polynomial.
std::pair<Monomial, Integer> leading_monomial(const MatrixPolynomial& p);

/// Terms sorted by term_compare, largest first.
std::vector<Term> terms_by_term_order(const MatrixPolynomial& p);

/// Exact value with x_{ij} = M(i, j). M needs at least k rows and n columns.
Integer evaluate(const MatrixPolynomial& p, const IntMatrix& m);

/// {"n":N,"k":K,"terms":[{"rows":[...],"coeff":"<decimal>"}]}, terms in
/// descending term order.
nlohmann::json to_json(const MatrixPolynomial& p);
MatrixPolynomial polynomial_from_json(const nlohmann::json& j);

/// Human-readable form such as `+x(1,1)*x(2,2) -x(2,1)*x(1,2)`: largest term
/// first, variables x(row,col) by column.
std::string to_pretty(const MatrixPolynomial& p);

}  // namespace flamingo
