#include "flamingo/tableaux.hpp"

#include <algorithm>
#include <sstream>

#include "flamingo/error.hpp"

namespace flamingo {

namespace {

void require_admissible(const FlamingoContext& ctx) {
  if (!ctx.admissible()) {
    throw Error(ErrorKind::kBlockTooSmall,
                "every block needs at least r = " + std::to_string(ctx.r) + " elements");
  }
}

}  // namespace

JellyfishTableau::JellyfishTableau(OrderedSetPartition pi, int r, std::vector<int> tentacle_columns)
    : pi_(std::move(pi)), ctx_(FlamingoContext::of(pi_, r)), tentacle_columns_(std::move(tentacle_columns)) {
  require_admissible(ctx_);
  if (static_cast<int>(tentacle_columns_.size()) != ctx_.nu - r) {
    throw Error(ErrorKind::kInvalidParameters, "wrong number of tentacle rows");
  }
  std::vector<int> used(static_cast<std::size_t>(ctx_.d) + 1, 0);
  for (int c : tentacle_columns_) {
    if (c < 1 || c > ctx_.d) throw Error(ErrorKind::kInvalidParameters, "tentacle column out of range");
    ++used[static_cast<std::size_t>(c)];
  }
  for (int j = 1; j <= ctx_.d; ++j) {
    if (used[static_cast<std::size_t>(j)] != ctx_.nu_i[static_cast<std::size_t>(j - 1)]) {
      throw Error(ErrorKind::kInvalidParameters,
                  "column " + std::to_string(j) + " must receive |pi_j| - r tentacle rows");
    }
  }
}

JellyfishTableau JellyfishTableau::from_row_sets(OrderedSetPartition pi, int r,
                                                 const std::vector<std::vector<int>>& row_sets) {
  const FlamingoContext ctx = FlamingoContext::of(pi, r);
  require_admissible(ctx);
  if (static_cast<int>(row_sets.size()) != ctx.d) {
    throw Error(ErrorKind::kSizeMismatch, "one row set per column is required");
  }
  std::vector<int> columns(static_cast<std::size_t>(std::max(ctx.nu - r, 0)), 0);
  for (int j = 1; j <= ctx.d; ++j) {
    for (int row : row_sets[static_cast<std::size_t>(j - 1)]) {
      if (row <= r) continue;
      if (row > ctx.nu) throw Error(ErrorKind::kInvalidParameters, "row beyond nu");
      int& slot = columns[static_cast<std::size_t>(row - r - 1)];
      if (slot != 0) throw Error(ErrorKind::kInvalidParameters, "tentacle row used twice");
      slot = j;
    }
  }
  return JellyfishTableau(std::move(pi), r, std::move(columns));
}

std::vector<int> JellyfishTableau::rows_of_column(int j) const {
  std::vector<int> rows;
  for (int i = 1; i <= ctx_.r; ++i) rows.push_back(i);
  for (std::size_t t = 0; t < tentacle_columns_.size(); ++t) {
    if (tentacle_columns_[t] == j) rows.push_back(ctx_.r + 1 + static_cast<int>(t));
  }
  return rows;
}

TableauGrid JellyfishTableau::grid() const {
  TableauGrid g(static_cast<std::size_t>(ctx_.nu), std::vector<int>(static_cast<std::size_t>(ctx_.d), 0));
  for (int j = 1; j <= ctx_.d; ++j) {
    const Block& block = pi_.block(j);
    const auto rows = rows_of_column(j);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      g[static_cast<std::size_t>(rows[t] - 1)][static_cast<std::size_t>(j - 1)] = block[t];
    }
  }
  return g;
}

std::vector<int> grid_reading_word(const TableauGrid& grid) {
  std::vector<int> word;
  for (const auto& row : grid) {
    for (int v : row) {
      if (v != 0) word.push_back(v);
    }
  }
  return word;
}

std::vector<int> JellyfishTableau::reading_word() const { return grid_reading_word(grid()); }

long JellyfishTableau::inversions() const { return inversion_count(reading_word()); }

std::string JellyfishTableau::render() const {
  std::ostringstream os;
  for (const auto& row : grid()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << '\t';
      if (row[j] == 0) {
        os << '.';
      } else {
        os << row[j];
      }
    }
    os << '\n';
  }
  return os.str();
}

namespace {

struct TableauEnumerator {
  const OrderedSetPartition* pi;
  const FlamingoContext* ctx;
  std::vector<int> columns;  // indexed by tentacle row - r - 1
  std::vector<JellyfishTableau>* out;

  // Fills column j with nu_j of the free tentacle rows, choosing row sets in
  // lexicographic order.
  void fill(int j) {
    if (j == ctx->d) {
      auto cols = columns;
      for (int& c : cols) {
        if (c == 0) c = j;
      }
      out->emplace_back(*pi, ctx->r, std::move(cols));
      return;
    }
    choose(j, 0, ctx->nu_i[static_cast<std::size_t>(j - 1)]);
  }

  void choose(int j, std::size_t from, int remaining) {
    if (remaining == 0) {
      fill(j + 1);
      return;
    }
    for (std::size_t t = from; t < columns.size(); ++t) {
      if (columns[t] != 0) continue;
      columns[t] = j;
      choose(j, t + 1, remaining - 1);
      columns[t] = 0;
    }
  }
};

}  // namespace

std::vector<JellyfishTableau> enumerate_tableaux(const OrderedSetPartition& pi, int r) {
  const FlamingoContext ctx = FlamingoContext::of(pi, r);
  require_admissible(ctx);
  std::vector<JellyfishTableau> out;
  TableauEnumerator e{&pi, &ctx, std::vector<int>(static_cast<std::size_t>(ctx.nu - r), 0), &out};
  e.fill(1);
  return out;
}

Integer tableau_count(const OrderedSetPartition& pi, int r) {
  const FlamingoContext ctx = FlamingoContext::of(pi, r);
  if (!ctx.admissible()) return 0;
  // Product of binomials C(remaining, nu_i) equals the multinomial.
  Integer count = 1;
  int remaining = ctx.nu - r;
  for (int k : ctx.nu_i) {
    Integer binom = 1;
    for (int t = 1; t <= k; ++t) binom = binom * (remaining - k + t) / t;
    count *= binom;
    remaining -= k;
  }
  return count;
}

long column_permuted_inversions(const TableauGrid& grid) {
  std::vector<std::pair<int, int>> cells;  // (entry, column)
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) cells.emplace_back(row[j], static_cast<int>(j));
    }
  }
  long count = 0;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (cells[a].second != cells[b].second && cells[a].first > cells[b].first) ++count;
    }
  }
  return count;
}

int column_permuted_sign(const TableauGrid& grid) {
  return column_permuted_inversions(grid) % 2 == 0 ? 1 : -1;
}

JellyfishTableau permute_columns(const Permutation& sigma, const JellyfishTableau& t) {
  if (sigma.size() != t.context().d) {
    throw Error(ErrorKind::kSizeMismatch, "column permutation size differs from block count");
  }
  std::vector<int> columns = t.tentacle_columns();
  for (int& c : columns) c = sigma(c);
  return JellyfishTableau(permute_blocks(sigma, t.partition()), t.r(), std::move(columns));
}

MatrixPolynomial minor_product(const JellyfishTableau& t) {
  const FlamingoContext& ctx = t.context();
  MatrixPolynomial product = MatrixPolynomial::constant(ctx.n, ctx.nu, 1);
  for (int j = 1; j <= ctx.d; ++j) {
    product = product * minor({t.rows_of_column(j), t.partition().block(j)}, ctx.n, ctx.nu);
  }
  return product;
}

}  // namespace flamingo
