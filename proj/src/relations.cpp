#include "flamingo/relations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "flamingo/error.hpp"
#include "flamingo/invariants.hpp"
#include "flamingo/specht.hpp"

namespace flamingo {

namespace {

int total_size(const std::vector<Block>& blocks) {
  int n = 0;
  for (const Block& b : blocks) n += static_cast<int>(b.size());
  return n;
}

OrderedSetPartition checked_partition(std::vector<Block> blocks) {
  const int n = total_size(blocks);
  for (const Block& b : blocks) {
    if (b.empty()) throw Error(ErrorKind::kConstraintViolation, "blocks must be nonempty");
  }
  try {
    return OrderedSetPartition(n, std::move(blocks));
  } catch (const Error& e) {
    throw Error(ErrorKind::kConstraintViolation, e.what());
  }
}

Block merged(Block a, const Block& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

Block without(const Block& a, int v) {
  Block out;
  for (int x : a) {
    if (x != v) out.push_back(x);
  }
  return out;
}

}  // namespace

MatrixPolynomial signed_invariant_sum(const std::vector<SignedPartition>& terms, int r,
                                      InvariantCache* cache) {
  if (terms.empty()) throw Error(ErrorKind::kInvalidParameters, "empty sum has no column count");
  const int n = terms.front().partition.size();
  std::vector<std::pair<int, MatrixPolynomial>> parts;
  int k = 0;
  for (const auto& t : terms) {
    MatrixPolynomial p = cache ? *cache->get(t.partition, r) : jellyfish_invariant(t.partition, r);
    k = std::max(k, p.num_rows());
    parts.emplace_back(1, t.sign == 1 ? std::move(p) : p.scaled(t.sign));
  }
  return sum(n, k, parts);
}

OrderedSetPartition recurrence_left(const std::vector<Block>& prefix, const Block& a, const Block& b,
                                    const Block& c) {
  std::vector<Block> blocks = prefix;
  blocks.push_back(merged(a, b));
  blocks.push_back(c);
  return checked_partition(std::move(blocks));
}

std::vector<SignedPartition> recurrence_terms(const std::vector<Block>& prefix, const Block& a,
                                              const Block& b, const Block& c, int r) {
  if (r < 1 || static_cast<int>(c.size()) != r) {
    throw Error(ErrorKind::kConstraintViolation, "|C| must equal r");
  }
  {
    std::vector<Block> all = prefix;
    all.push_back(a);
    all.push_back(b);
    all.push_back(c);
    checked_partition(std::move(all));
  }
  Block sorted_c = c;
  std::sort(sorted_c.begin(), sorted_c.end());
  std::vector<SignedPartition> out;
  for (int size = 0; size <= r; ++size) {
    std::vector<char> mask(static_cast<std::size_t>(r), 0);
    std::fill(mask.begin(), mask.begin() + size, 1);
    do {
      Block s, rest;
      for (std::size_t t = 0; t < mask.size(); ++t) (mask[t] ? s : rest).push_back(sorted_c[t]);
      std::vector<Block> blocks = prefix;
      blocks.push_back(merged(a, s));
      blocks.push_back(merged(b, rest));
      out.push_back({size % 2 == 0 ? 1 : -1, checked_partition(std::move(blocks))});
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

bool verify_recurrence(const std::vector<Block>& prefix, const Block& a, const Block& b, const Block& c,
                       int r, InvariantCache* cache) {
  const auto terms = recurrence_terms(prefix, a, b, c, r);
  const OrderedSetPartition left = recurrence_left(prefix, a, b, c);
  const MatrixPolynomial lhs = cache ? *cache->get(left, r) : jellyfish_invariant(left, r);
  return lhs == signed_invariant_sum(terms, r, cache);
}

bool verify_three_term(const Block& a, const Block& b, const Block& c) {
  if (c.size() != 1) throw Error(ErrorKind::kConstraintViolation, "|C| must be 1");
  const std::vector<SignedPartition> terms{
      {1, checked_partition({merged(a, b), c})},
      {1, checked_partition({merged(a, c), b})},
      {1, checked_partition({merged(b, c), a})},
  };
  return signed_invariant_sum(terms, 1).is_zero();
}

// ---------------------------------------------------------------------------
// Crossing resolution

namespace {

struct CrossingQuadruple {
  int x_block;  // 1-based, holds a and c
  int y_block;  // holds b and e
};

CrossingQuadruple smallest_crossing(const OrderedSetPartition& pi) {
  const int n = pi.size();
  const auto owner = pi.block_index();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (owner[static_cast<std::size_t>(b)] == owner[static_cast<std::size_t>(a)]) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (owner[static_cast<std::size_t>(c)] != owner[static_cast<std::size_t>(a)]) continue;
        for (int e = c + 1; e <= n; ++e) {
          if (owner[static_cast<std::size_t>(e)] == owner[static_cast<std::size_t>(b)]) {
            return {owner[static_cast<std::size_t>(a)], owner[static_cast<std::size_t>(b)]};
          }
        }
      }
    }
  }
  throw Error(ErrorKind::kNoCrossing, "partition " + pi.to_string() + " has no crossing");
}

OrderedSetPartition with_blocks(const OrderedSetPartition& pi, int p, Block at_p, int q, Block at_q) {
  std::vector<Block> blocks = pi.blocks();
  blocks[static_cast<std::size_t>(p - 1)] = std::move(at_p);
  blocks[static_cast<std::size_t>(q - 1)] = std::move(at_q);
  return OrderedSetPartition(pi.size(), std::move(blocks));
}

// Rewrites [pi]_1 by peeling the largest element c off the block at `peel`
// with the relation
//   [P @ p, Q @ q] = -[U \ c @ p, {c} @ q] - [Q u c @ p, P \ c @ q]
// and recursing on the second term until the peeled block is a singleton.
std::vector<SignedPartition> peel(const OrderedSetPartition& pi, int peel_pos, int other_pos) {
  std::vector<SignedPartition> out;
  Block p_block = pi.block(peel_pos);
  Block q_block = pi.block(other_pos);
  const Block united = merged(p_block, q_block);
  int sign = 1;
  int p_pos = peel_pos;
  int q_pos = other_pos;
  while (p_block.size() > 1) {
    const int c = p_block.back();
    out.push_back({-sign, with_blocks(pi, p_pos, without(united, c), q_pos, Block{c})});
    sign = -sign;
    Block next_q = merged(q_block, Block{c});
    p_block = without(p_block, c);
    q_block = std::move(next_q);
    std::swap(p_pos, q_pos);
  }
  out.push_back({sign, with_blocks(pi, p_pos, p_block, q_pos, q_block)});
  return out;
}

}  // namespace

CrossingResolution resolve_crossing_r1(const OrderedSetPartition& pi) {
  const CrossingQuadruple q = smallest_crossing(pi);
  CrossingResolution res{peel(pi, q.x_block, q.y_block), peel(pi, q.y_block, q.x_block)};
  const int before = crossing_pair_count(pi);
  for (const auto* list : {&res.first, &res.second}) {
    for (const auto& t : *list) {
      if (crossing_pair_count(t.partition) >= before) {
        throw std::logic_error("crossing resolution did not reduce crossings for " + pi.to_string());
      }
    }
  }
  return res;
}

std::vector<SignedPartition> resolve_to_noncrossing_r1(const OrderedSetPartition& pi) {
  std::map<OrderedSetPartition, long> pending{{pi, 1}};
  std::map<OrderedSetPartition, long> done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const OrderedSetPartition& p = node.key();
    const long coeff = node.mapped();
    if (coeff == 0) continue;
    if (is_noncrossing(p)) {
      done[p] += coeff;
      continue;
    }
    for (const auto& t : resolve_crossing_r1(p).first) pending[t.partition] += coeff * t.sign;
  }
  std::vector<SignedPartition> out;
  for (const auto& [p, coeff] : done) {
    if (coeff != 0) out.push_back({static_cast<int>(coeff), p});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjecture harness

std::vector<OrderedSetPartition> conjecture_family(int n, int d, int r) {
  if (r < 3) throw Error(ErrorKind::kInvalidParameters, "the conjecture concerns r >= 3");
  std::vector<OrderedSetPartition> out;
  for (auto& p : enumerate_set_partitions(n, d, r)) {
    if (transposition_distance_to_noncrossing(p, r - 3)) out.push_back(std::move(p));
  }
  return out;
}

ConjectureReport verify_conjecture(int n, int d, int r) {
  const auto family = conjecture_family(n, d, r);
  std::vector<MatrixPolynomial> invariants;
  invariants.reserve(family.size());
  for (const auto& p : family) invariants.push_back(jellyfish_invariant(p, r));
  ConjectureReport report;
  report.family_size = family.size();
  report.rank = exact_rank(invariants).rank;
  return report;
}

}  // namespace flamingo
