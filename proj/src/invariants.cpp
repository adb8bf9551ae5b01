#include "flamingo/invariants.hpp"

#include <mutex>

#include "flamingo/error.hpp"
#include "flamingo/tableaux.hpp"

namespace flamingo {

MatrixPolynomial jellyfish_invariant(const OrderedSetPartition& pi, int r) {
  const FlamingoContext ctx = FlamingoContext::of(pi, r);
  if (!ctx.admissible()) return MatrixPolynomial(ctx.n, std::max(ctx.nu, 0));
  std::vector<std::pair<int, MatrixPolynomial>> terms;
  for (const JellyfishTableau& t : enumerate_tableaux(pi, r)) {
    terms.emplace_back(t.sign(), minor_product(t));
  }
  return sum(ctx.n, ctx.nu, terms);
}

MatrixPolynomial act_on_polynomial(const Permutation& w, const MatrixPolynomial& p) {
  const int n = p.num_columns();
  if (w.size() != n) throw Error(ErrorKind::kSizeMismatch, "permutation size differs from column count");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) {
    std::uint64_t packed = 0;
    for (int j = 1; j <= n; ++j) {
      if (const int row = t.monomial.row(j)) {
        packed |= static_cast<std::uint64_t>(row) << (4 * (w(j) - 1));
      }
    }
    terms.push_back({Monomial::from_packed(packed), t.coeff});
  }
  return MatrixPolynomial(n, p.num_rows(), std::move(terms));
}

bool verify_equivariance(const Permutation& w, const OrderedSetPartition& pi, int r) {
  const MatrixPolynomial lhs = act_on_polynomial(w, jellyfish_invariant(pi, r));
  const MatrixPolynomial rhs = jellyfish_invariant(act_elements(w, pi), r).scaled(w.sign());
  return lhs == rhs;
}

bool verify_block_reorder(const Permutation& sigma, const OrderedSetPartition& pi, int r) {
  const int factor = (r % 2 == 1) ? sigma.sign() : 1;
  return jellyfish_invariant(pi, r) ==
         jellyfish_invariant(permute_blocks(sigma, pi), r).scaled(factor);
}

std::shared_ptr<const MatrixPolynomial> InvariantCache::get(const OrderedSetPartition& pi, int r) {
  const std::string key = std::to_string(r) + "#" + pi.to_string();
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto value = std::make_shared<const MatrixPolynomial>(jellyfish_invariant(pi, r));
  std::unique_lock lock(mutex_);
  return entries_.emplace(key, std::move(value)).first->second;
}

std::size_t InvariantCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void InvariantCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

}  // namespace flamingo
