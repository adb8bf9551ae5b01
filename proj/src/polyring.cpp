#include "flamingo/polyring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "flamingo/error.hpp"

namespace flamingo {

namespace {

constexpr std::uint64_t kNibbleLowBits = 0x1111111111111111ull;

void check_dimensions(int n, int k) {
  if (n < 0 || n > Monomial::kMaxColumns || k < 0 || k > Monomial::kMaxRow) {
    throw Error(ErrorKind::kInvalidParameters,
                "matrix polynomials support at most " + std::to_string(Monomial::kMaxColumns) +
                    " columns and " + std::to_string(Monomial::kMaxRow) + " rows");
  }
}

// Sorts by monomial, merges equal monomials, drops zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) {
      c += terms[j].coeff;
      ++j;
    }
    if (c != 0) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two sorted term lists with b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].monomial < b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].monomial < a[i].monomial) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Integer(-b[j].coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coeff + b[j].coeff) : Integer(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

int inversion_parity(const std::vector<int>& perm) {
  int parity = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) parity ^= perm[i] > perm[j] ? 1 : 0;
  }
  return parity ? -1 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_rows(const std::vector<int>& rows) {
  if (rows.size() > static_cast<std::size_t>(kMaxColumns)) {
    throw Error(ErrorKind::kInvalidParameters, "too many columns for a monomial");
  }
  Monomial m;
  for (std::size_t j = 0; j < rows.size(); ++j) m.set_row(static_cast<int>(j) + 1, rows[j]);
  return m;
}

void Monomial::set_row(int col, int row) {
  if (col < 1 || col > kMaxColumns || row < 0 || row > kMaxRow) {
    throw Error(ErrorKind::kInvalidParameters, "monomial entry out of range");
  }
  const int shift = 4 * (col - 1);
  packed_ = (packed_ & ~(std::uint64_t{0xF} << shift)) |
            (static_cast<std::uint64_t>(row) << shift);
}

std::uint64_t Monomial::support() const {
  const std::uint64_t p = packed_;
  return (p | (p >> 1) | (p >> 2) | (p >> 3)) & kNibbleLowBits;
}

int Monomial::degree() const { return std::popcount(support()); }

std::vector<int> Monomial::rows(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = row(j);
  return out;
}

// ---------------------------------------------------------------------------
// MatrixPolynomial

MatrixPolynomial::MatrixPolynomial(int n, int k) : n_(n), k_(k) { check_dimensions(n, k); }

MatrixPolynomial::MatrixPolynomial(int n, int k, std::vector<Term> terms)
    : n_(n), k_(k), terms_(std::move(terms)) {
  check_dimensions(n, k);
  normalize(terms_);
}

MatrixPolynomial MatrixPolynomial::constant(int n, int k, Integer value) {
  std::vector<Term> terms;
  terms.push_back({Monomial{}, std::move(value)});
  return MatrixPolynomial(n, k, std::move(terms));
}

MatrixPolynomial MatrixPolynomial::variable(int n, int k, int row, int col) {
  if (row < 1 || row > k || col < 1 || col > n) {
    throw Error(ErrorKind::kInvalidParameters, "variable index outside the matrix");
  }
  Monomial m;
  m.set_row(col, row);
  return MatrixPolynomial(n, k, {Term{m, 1}});
}

Integer MatrixPolynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

void MatrixPolynomial::check_compatible(const MatrixPolynomial& other) const {
  if (n_ != other.n_) {
    throw Error(ErrorKind::kSizeMismatch, "polynomials over different column counts");
  }
}

MatrixPolynomial& MatrixPolynomial::operator+=(const MatrixPolynomial& other) {
  check_compatible(other);
  terms_ = merge(terms_, other.terms_, +1);
  k_ = std::max(k_, other.k_);
  return *this;
}

MatrixPolynomial& MatrixPolynomial::operator-=(const MatrixPolynomial& other) {
  check_compatible(other);
  terms_ = merge(terms_, other.terms_, -1);
  k_ = std::max(k_, other.k_);
  return *this;
}

MatrixPolynomial MatrixPolynomial::operator-() const {
  MatrixPolynomial out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MatrixPolynomial MatrixPolynomial::scaled(const Integer& factor) const {
  if (factor == 0) return MatrixPolynomial(n_, k_);
  MatrixPolynomial out = *this;
  for (Term& t : out.terms_) t.coeff *= factor;
  return out;
}

MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  a.check_compatible(b);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& x : a.terms_) {
    const std::uint64_t sx = x.monomial.support();
    for (const Term& y : b.terms_) {
      if (sx & y.monomial.support()) {
        throw Error(ErrorKind::kColumnCollision, "product of monomials sharing a column");
      }
      terms.push_back({Monomial::from_packed(x.monomial.packed() | y.monomial.packed()),
                       x.coeff * y.coeff});
    }
  }
  return MatrixPolynomial(a.n_, std::max(a.k_, b.k_), std::move(terms));
}

MatrixPolynomial sum(int n, int k, const std::vector<std::pair<int, MatrixPolynomial>>& signed_terms) {
  std::size_t total = 0;
  for (const auto& [sign, p] : signed_terms) total += p.size();
  std::vector<Term> terms;
  terms.reserve(total);
  for (const auto& [sign, p] : signed_terms) {
    if (p.num_columns() != n) {
      throw Error(ErrorKind::kSizeMismatch, "summand over a different column count");
    }
    for (const Term& t : p.terms()) {
      terms.push_back({t.monomial, sign > 0 ? t.coeff : Integer(-t.coeff)});
    }
  }
  return MatrixPolynomial(n, k, std::move(terms));
}

MatrixPolynomial minor(const MinorSpec& spec, int n, int k) {
  const auto& rows = spec.rows;
  const auto& cols = spec.cols;
  if (rows.size() != cols.size()) {
    throw Error(ErrorKind::kSizeMismatch, "minor needs as many rows as columns");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1 || rows[i] > k || cols[i] < 1 || cols[i] > n ||
        (i > 0 && (rows[i] <= rows[i - 1] || cols[i] <= cols[i - 1]))) {
      throw Error(ErrorKind::kInvalidParameters, "minor rows/columns must be ascending and in range");
    }
  }
  const std::size_t m = rows.size();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    std::uint64_t packed = 0;
    for (std::size_t t = 0; t < m; ++t) {
      packed |= static_cast<std::uint64_t>(rows[static_cast<std::size_t>(perm[t])])
                << (4 * (cols[t] - 1));
    }
    terms.push_back({Monomial::from_packed(packed), inversion_parity(perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return MatrixPolynomial(n, k, std::move(terms));
}

// ---------------------------------------------------------------------------
// Term order

namespace {

int variable_position(int row, int col, int n) {
  if (row == 1) return col - 1;
  if (row == 2) return n + (n - col);
  return (row - 1) * n + (col - 1);
}

}  // namespace

TermKey term_key(Monomial m, int n) {
  TermKey key{};
  for (int j = 1; j <= n; ++j) {
    const int row = m.row(j);
    if (row == 0) continue;
    const int pos = variable_position(row, j, n);
    key[static_cast<std::size_t>(pos / 64)] |= std::uint64_t{1} << (63 - pos % 64);
  }
  return key;
}

std::strong_ordering term_compare(Monomial a, Monomial b, int n) {
  return term_key(a, n) <=> term_key(b, n);
}

std::pair<Monomial, Integer> leading_monomial(const MatrixPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "zero polynomial has no leading monomial");
  const int n = p.num_columns();
  const Term* best = &p.terms().front();
  TermKey best_key = term_key(best->monomial, n);
  for (const Term& t : p.terms()) {
    const TermKey key = term_key(t.monomial, n);
    if (key > best_key) {
      best_key = key;
      best = &t;
    }
  }
  return {best->monomial, best->coeff};
}

std::vector<Term> terms_by_term_order(const MatrixPolynomial& p) {
  const int n = p.num_columns();
  std::vector<std::pair<TermKey, const Term*>> keyed;
  keyed.reserve(p.size());
  for (const Term& t : p.terms()) keyed.emplace_back(term_key(t.monomial, n), &t);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(keyed.size());
  for (const auto& [key, t] : keyed) out.push_back(*t);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation and serialization

Integer evaluate(const MatrixPolynomial& p, const IntMatrix& m) {
  if (m.cols() != p.num_columns()) {
    throw Error(ErrorKind::kSizeMismatch, "matrix column count differs from the polynomial's");
  }
  Integer total = 0;
  for (const Term& t : p.terms()) {
    Integer value = t.coeff;
    for (int j = 1; j <= p.num_columns() && value != 0; ++j) {
      const int row = t.monomial.row(j);
      if (row == 0) continue;
      if (row > m.rows()) {
        throw Error(ErrorKind::kSizeMismatch, "matrix has too few rows for the polynomial");
      }
      value *= m.at(row, j);
    }
    total += value;
  }
  return total;
}

nlohmann::json to_json(const MatrixPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : terms_by_term_order(p)) {
    terms.push_back({{"rows", t.monomial.rows(p.num_columns())}, {"coeff", t.coeff.str()}});
  }
  return {{"n", p.num_columns()}, {"k", p.num_rows()}, {"terms", std::move(terms)}};
}

MatrixPolynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto rows = t.at("rows").get<std::vector<int>>();
      if (static_cast<int>(rows.size()) != n) {
        throw Error(ErrorKind::kParse, "term row vector length differs from n");
      }
      terms.push_back({Monomial::from_rows(rows), Integer(t.at("coeff").get<std::string>())});
    }
    return MatrixPolynomial(n, k, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw Error(ErrorKind::kParse, std::string("polynomial JSON: ") + e.what());
  }
}

std::string to_pretty(const MatrixPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_by_term_order(p)) {
    if (!first) os << ' ';
    first = false;
    os << (t.coeff < 0 ? '-' : '+');
    const Integer magnitude = abs(t.coeff);
    bool any = false;
    if (magnitude != 1) {
      os << magnitude;
      any = true;
    }
    for (int j = 1; j <= p.num_columns(); ++j) {
      if (const int row = t.monomial.row(j)) {
        os << (any ? "*" : "") << "x(" << row << ',' << j << ')';
        any = true;
      }
    }
    if (!any) os << '1';
  }
  return os.str();
}

}  // namespace flamingo
