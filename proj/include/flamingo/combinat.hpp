#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace flamingo {

/// A block of a set partition: distinct elements of [n], kept sorted ascending.
using Block = std::vector<int>;

/// A permutation of [n] in one-line notation (1-indexed images).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// s_i, swapping i and i+1.
  static Permutation simple_transposition(int n, int i);
  /// c_n = n 1 2 ... (n-1), i.e. j -> j-1 with 1 -> n.
  static Permutation long_cycle(int n);
  /// w_0 = n (n-1) ... 1.
  static Permutation longest_element(int n);
  /// All n! permutations in lexicographic order of their one-line notation.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// Composition: (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& other) const;

  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Number of pairs i < j with word[i] > word[j].
long inversion_count(const std::vector<int>& word);

/// A sequence of nonempty, pairwise disjoint blocks whose union is [n].
///
/// Text format: blocks separated by `|`, elements by whitespace, 1-indexed,
/// e.g. `2 3 6 10|5 7 8 9|1 4`. Elements are printed ascending within a block.
class OrderedSetPartition {
 public:
  OrderedSetPartition(int n, std::vector<Block> blocks);

  /// Infers n from the elements; rejects anything that is not a partition of [n].
  static OrderedSetPartition parse(std::string_view text);
  std::string to_string() const;

  int size() const { return n_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// 1-based block access, matching the pi_1 ... pi_d indexing.
  const Block& block(int i) const { return blocks_[static_cast<std::size_t>(i - 1)]; }
  int min_block_size() const;
  /// Block index (1-based) holding each element; entry 0 is unused.
  std::vector<int> block_index() const;

  /// Same unordered partition with blocks sorted by their minima.
  OrderedSetPartition canonical() const;

  auto operator<=>(const OrderedSetPartition&) const = default;

 private:
  int n_;
  std::vector<Block> blocks_;
};

struct OrderedSetPartitionHash {
  std::size_t operator()(const OrderedSetPartition& p) const;
};

/// Bookkeeping attached to a partition and a row parameter r: nu = n - (d-1)r,
/// nu_i = |pi_i| - r, tentacle rows S = [r+1, nu], rows below them E = [nu+1, n].
struct FlamingoContext {
  int n = 0;
  int d = 0;
  int r = 0;
  int nu = 0;
  std::vector<int> nu_i;

  static FlamingoContext of(const OrderedSetPartition& pi, int r);

  /// True when every block has at least r elements.
  bool admissible() const;
  std::vector<int> tentacle_rows() const;  // S
  std::vector<int> lower_rows() const;     // E
};

/// Every ordered set partition of [n] into d blocks of size >= r.
///
/// Order: elements 1..n are assigned to block indices recursively, and the
/// partitions come out in lexicographic order of the assignment vector
/// (block of 1, block of 2, ...). Throws kInvalidParameters when n < r*d.
std::vector<OrderedSetPartition> enumerate_ordered_partitions(int n, int d, int r);
/// Same sequence, streamed to `visit` without materializing the list.
void for_each_ordered_partition(int n, int d, int r,
                                const std::function<void(const OrderedSetPartition&)>& visit);

/// One representative per unordered set partition of [n] into d blocks of size
/// >= r, blocks ascending by minimum, generated as restricted growth strings.
std::vector<OrderedSetPartition> enumerate_set_partitions(int n, int d, int r);

/// No a < b < c < e with a, c in one block and b, e in another.
bool is_noncrossing(const OrderedSetPartition& pi);

/// Number of unordered pairs of blocks that cross each other.
int crossing_pair_count(const OrderedSetPartition& pi);

/// Noncrossing set partitions of [n], d blocks of size >= r, in canonical order.
std::vector<OrderedSetPartition> enumerate_noncrossing(int n, int d, int r);

/// (w.pi_1 | ... | w.pi_d); the block order is preserved.
OrderedSetPartition act_elements(const Permutation& w, const OrderedSetPartition& pi);
/// Applies j -> c_n(j).
OrderedSetPartition rotate(const OrderedSetPartition& pi);
/// Applies j -> n + 1 - j.
OrderedSetPartition reflect(const OrderedSetPartition& pi);
/// sigma(pi)_i = pi_{sigma^{-1}(i)}.
OrderedSetPartition permute_blocks(const Permutation& sigma, const OrderedSetPartition& pi);

/// Distinct unordered partitions (canonical form) in the rotation orbit of pi,
/// starting with pi itself.
std::vector<OrderedSetPartition> rotation_orbit(const OrderedSetPartition& pi);

/// Whether at most k adjacent transpositions s_1..s_{n-1}, acting on elements,
/// take pi to a noncrossing partition. Breadth-first search over unordered
/// partitions.
bool transposition_distance_to_noncrossing(const OrderedSetPartition& pi, int k);

}  // namespace flamingo
