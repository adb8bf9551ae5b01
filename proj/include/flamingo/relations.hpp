#pragma once

#include <vector>

#include "flamingo/combinat.hpp"
#include "flamingo/polyring.hpp"

namespace flamingo {

class InvariantCache;

struct SignedPartition {
  int sign = 1;
  OrderedSetPartition partition;

  bool operator==(const SignedPartition&) const = default;
};

/// Sum of sign * [partition]_r over the list (all partitions of the same [n]).
MatrixPolynomial signed_invariant_sum(const std::vector<SignedPartition>& terms, int r,
                                      InvariantCache* cache = nullptr);

/// Left side (prefix | A u B | C) of the recurrence.
OrderedSetPartition recurrence_left(const std::vector<Block>& prefix, const Block& a, const Block& b,
                                    const Block& c);

/// Right side terms ((-1)^{|S|}, (prefix | A u S | B u (C \ S))) for S subset of C,
/// ordered by |S| then lexicographically. Throws kConstraintViolation unless
/// prefix, A, B, C are nonempty, disjoint, cover [n], and |C| = r.
std::vector<SignedPartition> recurrence_terms(const std::vector<Block>& prefix, const Block& a,
                                              const Block& b, const Block& c, int r);

bool verify_recurrence(const std::vector<Block>& prefix, const Block& a, const Block& b, const Block& c,
                       int r, InvariantCache* cache = nullptr);

/// [A u B | C]_1 + [A u C | B]_1 + [B u C | A]_1 == 0 with |C| = 1.
bool verify_three_term(const Block& a, const Block& b, const Block& c);

struct CrossingResolution {
  std::vector<SignedPartition> first;
  std::vector<SignedPartition> second;
};

/// Two rewritings of [pi]_1 as signed sums of partitions with fewer crossing
/// block pairs, both obtained by repeated three-term moves on the
/// lexicographically smallest crossing quadruple a < b < c < e (a, c in block
/// X; b, e in block Y). The first peels elements off X, the second off Y.
/// Throws kNoCrossing for noncrossing input and kInvalidParameters unless
/// every block is nonempty (r = 1 is implied).
CrossingResolution resolve_crossing_r1(const OrderedSetPartition& pi);

/// Repeats the first resolution until every partition is noncrossing; returns
/// the merged expansion (equal partitions combined, zero coefficients removed,
/// coefficients carried in `sign`, which may exceed 1 in magnitude).
std::vector<SignedPartition> resolve_to_noncrossing_r1(const OrderedSetPartition& pi);

/// Unordered partitions of [n] into d blocks of size >= r that at most r-3
/// adjacent transpositions make noncrossing, in canonical form. Throws
/// kInvalidParameters for r < 3.
std::vector<OrderedSetPartition> conjecture_family(int n, int d, int r);

struct ConjectureReport {
  std::size_t family_size = 0;
  int rank = 0;
  bool holds() const { return family_size == static_cast<std::size_t>(rank); }
};

ConjectureReport verify_conjecture(int n, int d, int r);

}  // namespace flamingo
