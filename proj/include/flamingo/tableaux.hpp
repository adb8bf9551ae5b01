#pragma once

#include <string>
#include <vector>

#include "flamingo/combinat.hpp"
#include "flamingo/integer.hpp"
#include "flamingo/polyring.hpp"

namespace flamingo {

/// A filled grid of nu rows and d columns; 0 marks an empty cell.
using TableauGrid = std::vector<std::vector<int>>;

/// An r-jellyfish tableau of an ordered set partition: rows 1..r are full,
/// each row in [r+1, nu] holds exactly one entry, and column j holds pi_j in
/// increasing order. Stored as the column chosen by each tentacle row.
class JellyfishTableau {
 public:
  /// tentacle_columns[t] is the column (1-based) of row r+1+t. Throws
  /// kBlockTooSmall for undersized blocks and kInvalidParameters when the
  /// column counts do not match nu_1, ..., nu_d.
  JellyfishTableau(OrderedSetPartition pi, int r, std::vector<int> tentacle_columns);

  /// Builds the tableau whose column j uses exactly the rows row_sets[j-1].
  static JellyfishTableau from_row_sets(OrderedSetPartition pi, int r,
                                        const std::vector<std::vector<int>>& row_sets);

  const OrderedSetPartition& partition() const { return pi_; }
  const FlamingoContext& context() const { return ctx_; }
  int r() const { return ctx_.r; }
  const std::vector<int>& tentacle_columns() const { return tentacle_columns_; }

  /// R_j(T): the rows holding entries of column j, ascending.
  std::vector<int> rows_of_column(int j) const;
  TableauGrid grid() const;
  std::vector<int> reading_word() const;
  long inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  /// Rows top to bottom, tab-separated cells, `.` for empty cells.
  std::string render() const;

  bool operator==(const JellyfishTableau& other) const {
    return pi_ == other.pi_ && ctx_.r == other.ctx_.r && tentacle_columns_ == other.tentacle_columns_;
  }

 private:
  OrderedSetPartition pi_;
  FlamingoContext ctx_;
  std::vector<int> tentacle_columns_;
};

/// All of J_r(pi), ordered lexicographically by (R_1, R_2, ..., R_d) where the
/// tentacle rows of each column are compared as ascending lists. Throws
/// kBlockTooSmall when some block has fewer than r elements.
std::vector<JellyfishTableau> enumerate_tableaux(const OrderedSetPartition& pi, int r);

/// (nu - r)! / prod nu_i!, or 0 when some block is undersized.
Integer tableau_count(const OrderedSetPartition& pi, int r);

/// Reading word of a grid, row by row, skipping empty cells.
std::vector<int> grid_reading_word(const TableauGrid& grid);

/// Inversions of the reading word, not counting pairs in the same column.
long column_permuted_inversions(const TableauGrid& grid);
int column_permuted_sign(const TableauGrid& grid);

/// The tableau of sigma(pi) whose column i is column sigma^{-1}(i) of T.
JellyfishTableau permute_columns(const Permutation& sigma, const JellyfishTableau& t);

/// J(T) = prod_i M^{pi_i}_{R_i(T)}, expanded, over nu rows.
MatrixPolynomial minor_product(const JellyfishTableau& t);

}  // namespace flamingo
