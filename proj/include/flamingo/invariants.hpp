#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "flamingo/combinat.hpp"
#include "flamingo/polyring.hpp"

namespace flamingo {

/// [pi]_r = sum over T in J_r(pi) of sgn(T) J(T), over nu rows. The zero
/// polynomial when some block has fewer than r elements.
MatrixPolynomial jellyfish_invariant(const OrderedSetPartition& pi, int r);

/// Substitutes x_{a,j} -> x_{a,w(j)}.
MatrixPolynomial act_on_polynomial(const Permutation& w, const MatrixPolynomial& p);

/// w . [pi]_r == sgn(w) [w . pi]_r.
bool verify_equivariance(const Permutation& w, const OrderedSetPartition& pi, int r);

/// [pi]_r == sgn(sigma)^r [sigma(pi)]_r.
bool verify_block_reorder(const Permutation& sigma, const OrderedSetPartition& pi, int r);

/// Write-once memo of jellyfish invariants keyed by partition text and r.
/// Concurrent lookups are safe; a value computed twice by racing threads is
/// identical, so the first insert wins.
class InvariantCache {
 public:
  std::shared_ptr<const MatrixPolynomial> get(const OrderedSetPartition& pi, int r);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const MatrixPolynomial>> entries_;
};

}  // namespace flamingo
