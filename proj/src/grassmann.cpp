#include "flamingo/grassmann.hpp"

#include <algorithm>
#include <sstream>

#include "flamingo/error.hpp"
#include "flamingo/tableaux.hpp"

namespace flamingo {

namespace {

// Sorts `v` in place and returns the sign of the sorting permutation, or 0
// when an index repeats.
int sort_with_sign(std::vector<int>& v) {
  int parity = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      parity ^= 1;
    }
  }
  return parity ? -1 : 1;
}

std::string format_set(const IndexSet& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os.str();
}

}  // namespace

IntMatrix phi(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::kSizeMismatch, "phi needs a square matrix");
  const int n = m.rows();
  IntMatrix out(n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    out.at(i, i) = (i % 2 == 1) ? 1 : -1;
    for (int j = 1; j <= n; ++j) out.at(i, n + j) = m.at(i, j);
  }
  return out;
}

IndexSet delta_index_set(const std::vector<int>& rows, const std::vector<int>& cols, int n) {
  if (rows.size() != cols.size()) {
    throw Error(ErrorKind::kSizeMismatch, "row and column sets differ in size");
  }
  std::vector<bool> deleted(static_cast<std::size_t>(n) + 1, false);
  for (int i : rows) {
    if (i < 1 || i > n) throw Error(ErrorKind::kInvalidParameters, "row outside [n]");
    deleted[static_cast<std::size_t>(i)] = true;
  }
  IndexSet k;
  for (int i = 1; i <= n; ++i) {
    if (!deleted[static_cast<std::size_t>(i)]) k.push_back(i);
  }
  std::vector<int> shifted;
  for (int j : cols) {
    if (j < 1 || j > n) throw Error(ErrorKind::kInvalidParameters, "column outside [n]");
    shifted.push_back(j + n);
  }
  std::sort(shifted.begin(), shifted.end());
  k.insert(k.end(), shifted.begin(), shifted.end());
  return k;
}

DeltaMinor delta_to_minor(const IndexSet& k, int n) {
  if (static_cast<int>(k.size()) != n) {
    throw Error(ErrorKind::kSizeMismatch, "a Pluecker coordinate of Gr(n, 2n) needs n indices");
  }
  for (std::size_t t = 0; t < k.size(); ++t) {
    if (k[t] < 1 || k[t] > 2 * n || (t > 0 && k[t] <= k[t - 1])) {
      throw Error(ErrorKind::kInvalidParameters, "index set must be ascending within [2n]");
    }
  }
  std::vector<bool> unit(static_cast<std::size_t>(n) + 1, false);
  DeltaMinor out;
  for (int v : k) {
    if (v <= n) {
      unit[static_cast<std::size_t>(v)] = true;
    } else {
      out.minor.cols.push_back(v - n);
    }
  }
  // Column u of M_0 is (-1)^{u-1} e_u. Expanding along it, with u in position
  // t among the unit columns, contributes (-1)^{u+t}; the product over all unit
  // columns is (-1)^{#{(u, i) : u unit, i deleted-complement row, i < u}}.
  int parity = 0;
  int rows_below = 0;
  for (int u = 1; u <= n; ++u) {
    if (unit[static_cast<std::size_t>(u)]) {
      parity ^= (u - 1) & 1;
      parity ^= rows_below & 1;
    } else {
      out.minor.rows.push_back(u);
      ++rows_below;
    }
  }
  out.sign = parity ? -1 : 1;
  const int size_parity_sign = out.minor.rows.size() % 2 == 0 ? 1 : -1;
  out.matches_size_parity = out.sign == size_parity_sign;
  return out;
}

// ---------------------------------------------------------------------------
// PlueckerExpression

void PlueckerExpression::add(Factors factors, const Integer& coeff) {
  if (coeff == 0) return;
  std::sort(factors.begin(), factors.end());
  auto [it, inserted] = terms_.try_emplace(std::move(factors), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string PlueckerExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [factors, coeff] : terms_) {
    if (!first) os << ' ';
    first = false;
    os << (coeff < 0 ? '-' : '+');
    const Integer magnitude = abs(coeff);
    if (magnitude != 1 || factors.empty()) os << magnitude;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      os << ((i || magnitude != 1) ? "*" : "") << "D[" << format_set(factors[i]) << ']';
    }
  }
  return os.str();
}

nlohmann::json PlueckerExpression::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [factors, coeff] : terms_) {
    terms.push_back({{"factors", factors}, {"coeff", coeff.str()}});
  }
  return {{"n", n_}, {"terms", std::move(terms)}};
}

// ---------------------------------------------------------------------------
// Extensor

Extensor Extensor::decomposable(int n, const std::vector<int>& indices) {
  Extensor x(n, static_cast<int>(indices.size()));
  IndexSet sorted = indices;
  for (int v : sorted) {
    if (v < 1 || v > 2 * n) throw Error(ErrorKind::kInvalidParameters, "vector index outside [2n]");
  }
  const int sign = sort_with_sign(sorted);
  if (sign != 0) x.add({sign, std::move(sorted), {}});
  return x;
}

void Extensor::add(ExtensorTerm term) {
  if (static_cast<int>(term.indices.size()) != degree_) {
    throw Error(ErrorKind::kDegreeMismatch, "extensor term of the wrong degree");
  }
  if (term.coeff != 0) terms_.push_back(std::move(term));
}

Extensor cap(const Extensor& x, const Extensor& y) {
  if (x.n() != y.n()) throw Error(ErrorKind::kSizeMismatch, "cap of extensors over different spaces");
  const int n = x.n();
  const int moved = n - y.degree();
  const int rest = x.degree() - moved;
  if (moved < 0 || rest < 0) {
    throw Error(ErrorKind::kDegreeMismatch, "cap needs deg x + deg y >= n and deg y <= n");
  }
  Extensor out(n, rest);
  const std::size_t len = static_cast<std::size_t>(x.degree());
  std::vector<char> chosen(len, 0);
  std::fill(chosen.begin(), chosen.begin() + moved, 1);
  // prev_permutation over a 1..10..0 mask visits the subsets in lexicographic
  // order of the chosen positions.
  do {
    int parity = 0;
    int seen_rest = 0;
    for (std::size_t p = 0; p < len; ++p) {
      if (chosen[p]) {
        parity ^= seen_rest & 1;
      } else {
        ++seen_rest;
      }
    }
    for (const ExtensorTerm& xt : x.terms()) {
      std::vector<int> residual;
      std::vector<int> column_list;
      for (std::size_t p = 0; p < len; ++p) {
        (chosen[p] ? column_list : residual).push_back(xt.indices[p]);
      }
      for (const ExtensorTerm& yt : y.terms()) {
        std::vector<int> columns = column_list;
        columns.insert(columns.end(), yt.indices.begin(), yt.indices.end());
        const int sort_sign = sort_with_sign(columns);
        if (sort_sign == 0) continue;
        ExtensorTerm t;
        t.coeff = xt.coeff * yt.coeff * (parity ? -sort_sign : sort_sign);
        t.indices = residual;
        t.factors = xt.factors;
        t.factors.insert(t.factors.end(), yt.factors.begin(), yt.factors.end());
        t.factors.push_back(std::move(columns));
        out.add(std::move(t));
      }
    }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

Extensor wedge(const Extensor& x, const Extensor& y) {
  if (x.n() != y.n()) throw Error(ErrorKind::kSizeMismatch, "wedge of extensors over different spaces");
  if (x.degree() + y.degree() > x.n()) {
    return Extensor(x.n(), x.degree() + y.degree());
  }
  Extensor out(x.n(), x.degree() + y.degree());
  for (const ExtensorTerm& xt : x.terms()) {
    for (const ExtensorTerm& yt : y.terms()) {
      std::vector<int> indices = xt.indices;
      indices.insert(indices.end(), yt.indices.begin(), yt.indices.end());
      const int sign = sort_with_sign(indices);
      if (sign == 0) continue;
      ExtensorTerm t;
      t.coeff = xt.coeff * yt.coeff * sign;
      t.indices = std::move(indices);
      t.factors = xt.factors;
      t.factors.insert(t.factors.end(), yt.factors.begin(), yt.factors.end());
      out.add(std::move(t));
    }
  }
  return out;
}

PlueckerExpression top_degree_value(const Extensor& x) {
  if (x.degree() != x.n() && x.degree() != 0) {
    throw Error(ErrorKind::kDegreeMismatch, "only degree 0 or n extensors are scalars");
  }
  PlueckerExpression e(x.n());
  for (const ExtensorTerm& t : x.terms()) {
    auto factors = t.factors;
    if (x.degree() == x.n()) factors.push_back(t.indices);
    e.add(std::move(factors), t.coeff);
  }
  return e;
}

PlueckerExpression gc_jellyfish(const OrderedSetPartition& pi, int r) {
  const FlamingoContext ctx = FlamingoContext::of(pi, r);
  if (!ctx.admissible()) {
    throw Error(ErrorKind::kBlockTooSmall,
                "every block needs at least r = " + std::to_string(r) + " elements");
  }
  const int n = ctx.n;
  const std::vector<int> tentacles = ctx.tentacle_rows();
  const std::vector<int> lower = ctx.lower_rows();
  auto right_side = [&](int i) {
    std::vector<int> indices = lower;
    for (int v : pi.block(i)) indices.push_back(v + n);
    return Extensor::decomposable(n, indices);
  };
  const Extensor tentacle_vectors = Extensor::decomposable(n, tentacles);
  Extensor acc = Extensor::decomposable(n, {});
  for (int i = 1; i < ctx.d; ++i) acc = wedge(acc, cap(tentacle_vectors, right_side(i)));
  acc = wedge(acc, right_side(ctx.d));
  return top_degree_value(acc);
}

MatrixPolynomial phi_star(const PlueckerExpression& e) {
  const int n = e.n();
  std::vector<std::pair<int, MatrixPolynomial>> terms;
  for (const auto& [factors, coeff] : e.terms()) {
    MatrixPolynomial product = MatrixPolynomial::constant(n, n, coeff);
    for (const IndexSet& k : factors) {
      const DeltaMinor dm = delta_to_minor(k, n);
      product = product * minor(dm.minor, n, n).scaled(dm.sign);
    }
    terms.emplace_back(1, std::move(product));
  }
  return sum(n, n, terms);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::kSizeMismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (int k = 1; k < n; ++k) {
    if (a.at(k, k) == 0) {
      int swap_row = 0;
      for (int i = k + 1; i <= n; ++i) {
        if (a.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == 0) return 0;
      for (int j = 1; j <= n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i <= n; ++i) {
      for (int j = k + 1; j <= n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n, n);
}

Integer evaluate(const PlueckerExpression& e, const IntMatrix& columns) {
  const int n = e.n();
  if (columns.rows() != n || columns.cols() != 2 * n) {
    throw Error(ErrorKind::kSizeMismatch, "expected an n x 2n matrix");
  }
  Integer total = 0;
  for (const auto& [factors, coeff] : e.terms()) {
    Integer value = coeff;
    for (const IndexSet& k : factors) {
      IntMatrix sub(n, n);
      for (int i = 1; i <= n; ++i) {
        for (int t = 0; t < n; ++t) sub.at(i, t + 1) = columns.at(i, k[static_cast<std::size_t>(t)]);
      }
      value *= determinant(sub);
    }
    total += value;
  }
  return total;
}

std::optional<int> compare_up_to_sign(const MatrixPolynomial& p, const MatrixPolynomial& q) {
  if (p == q) return 1;
  if (p == -q) return -1;
  return std::nullopt;
}

int predicted_global_sign(const OrderedSetPartition& pi, int r) {
  const FlamingoContext ctx = FlamingoContext::of(pi, r);
  if (!ctx.admissible()) {
    throw Error(ErrorKind::kBlockTooSmall,
                "every block needs at least r = " + std::to_string(r) + " elements");
  }
  std::vector<int> columns;
  for (int j = 1; j <= ctx.d; ++j) {
    columns.insert(columns.end(), static_cast<std::size_t>(ctx.nu_i[static_cast<std::size_t>(j - 1)]), j);
  }
  const JellyfishTableau top(pi, r, std::move(columns));
  long twice = 0;
  for (int j = 1; j <= ctx.d; ++j) {
    const long nu_j = ctx.nu_i[static_cast<std::size_t>(j - 1)];
    twice += nu_j * (ctx.nu - static_cast<long>(pi.block(j).size()));
  }
  if (twice % 2 != 0) throw std::logic_error("global sign exponent is not an integer");
  const long exponent = top.inversions() + twice / 2;
  return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace flamingo
