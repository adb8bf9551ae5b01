#include "flamingo/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "flamingo/error.hpp"

namespace flamingo {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::kInvalidParameters, "not a permutation: " + to_string());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::simple_transposition(int n, int i) {
  if (i < 1 || i >= n) {
    throw Error(ErrorKind::kInvalidParameters, "s_i needs 1 <= i < n");
  }
  auto images = identity(n).images_;
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
  return Permutation(std::move(images));
}

Permutation Permutation::long_cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j - 1)] = j == 1 ? n : j - 1;
  return Permutation(std::move(images));
}

Permutation Permutation::longest_element(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j - 1)] = n + 1 - j;
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  auto images = identity(n).images_;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) {
    throw Error(ErrorKind::kSizeMismatch, "composing permutations of different sizes");
  }
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(out));
}

int Permutation::inversions() const { return static_cast<int>(inversion_count(images_)); }

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
  return os.str();
}

long inversion_count(const std::vector<int>& word) {
  long count = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] > word[j]) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// OrderedSetPartition

OrderedSetPartition::OrderedSetPartition(int n, std::vector<Block> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1 || blocks_.empty()) {
    throw Error(ErrorKind::kInvalidParameters, "a partition needs n >= 1 and d >= 1");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  int covered = 0;
  for (Block& b : blocks_) {
    if (b.empty()) throw Error(ErrorKind::kInvalidParameters, "empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n_) {
        throw Error(ErrorKind::kInvalidParameters,
                    "element " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw Error(ErrorKind::kInvalidParameters, "element " + std::to_string(v) + " repeated");
      }
      seen[static_cast<std::size_t>(v)] = true;
      ++covered;
    }
  }
  if (covered != n_) {
    throw Error(ErrorKind::kInvalidParameters, "blocks do not cover [1, " + std::to_string(n_) + "]");
  }
}

OrderedSetPartition OrderedSetPartition::parse(std::string_view text) {
  std::vector<Block> blocks;
  int n = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view piece =
        text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    std::istringstream is{std::string(piece)};
    Block block;
    std::string token;
    while (is >> token) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw Error(ErrorKind::kParse, "bad element '" + token + "' in partition text");
      }
      block.push_back(value);
      n = std::max(n, value);
    }
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  try {
    return OrderedSetPartition(n, std::move(blocks));
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, "'" + std::string(text) + "': " + e.what());
  }
}

std::string OrderedSetPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) os << (j ? " " : "") << blocks_[i][j];
  }
  return os.str();
}

int OrderedSetPartition::min_block_size() const {
  std::size_t m = blocks_.front().size();
  for (const Block& b : blocks_) m = std::min(m, b.size());
  return static_cast<int>(m);
}

std::vector<int> OrderedSetPartition::block_index() const {
  std::vector<int> index(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int v : blocks_[i]) index[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
  }
  return index;
}

OrderedSetPartition OrderedSetPartition::canonical() const {
  auto blocks = blocks_;
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  return OrderedSetPartition(n_, std::move(blocks));
}

std::size_t OrderedSetPartitionHash::operator()(const OrderedSetPartition& p) const {
  std::size_t h = static_cast<std::size_t>(p.size());
  for (const Block& b : p.blocks()) {
    for (int v : b) h = h * 1000003u ^ static_cast<std::size_t>(v);
    h = h * 1000003u ^ 0x9e3779b9u;
  }
  return h;
}

// ---------------------------------------------------------------------------
// FlamingoContext

FlamingoContext FlamingoContext::of(const OrderedSetPartition& pi, int r) {
  if (r < 1) throw Error(ErrorKind::kInvalidParameters, "r must be positive");
  FlamingoContext ctx;
  ctx.n = pi.size();
  ctx.d = pi.num_blocks();
  ctx.r = r;
  ctx.nu = ctx.n - (ctx.d - 1) * r;
  for (const Block& b : pi.blocks()) ctx.nu_i.push_back(static_cast<int>(b.size()) - r);
  return ctx;
}

bool FlamingoContext::admissible() const {
  return std::all_of(nu_i.begin(), nu_i.end(), [](int v) { return v >= 0; });
}

std::vector<int> FlamingoContext::tentacle_rows() const {
  std::vector<int> rows;
  for (int i = r + 1; i <= nu; ++i) rows.push_back(i);
  return rows;
}

std::vector<int> FlamingoContext::lower_rows() const {
  std::vector<int> rows;
  for (int i = std::max(nu + 1, 1); i <= n; ++i) rows.push_back(i);
  return rows;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void check_enumeration_parameters(int n, int d, int r) {
  if (n < 1 || d < 1 || r < 1) {
    throw Error(ErrorKind::kInvalidParameters, "n, d and r must be positive");
  }
  if (n < r * d) {
    throw Error(ErrorKind::kInvalidParameters,
                "n < r*d: no room for " + std::to_string(d) + " blocks of size " + std::to_string(r));
  }
}

struct OrderedEnumerator {
  int n, d, r;
  std::vector<Block> blocks;
  const std::function<void(const OrderedSetPartition&)>* visit;

  int deficit() const {
    int total = 0;
    for (const Block& b : blocks) total += std::max(0, r - static_cast<int>(b.size()));
    return total;
  }

  void run(int element) {
    if (element > n) {
      (*visit)(OrderedSetPartition(n, blocks));
      return;
    }
    for (auto& b : blocks) {
      b.push_back(element);
      if (deficit() <= n - element) run(element + 1);
      b.pop_back();
    }
  }
};

struct SetPartitionEnumerator {
  int n, d, r;
  std::vector<Block> blocks;
  std::vector<OrderedSetPartition>* out;

  int deficit() const {
    int total = r * (d - static_cast<int>(blocks.size()));
    for (const Block& b : blocks) total += std::max(0, r - static_cast<int>(b.size()));
    return total;
  }

  void run(int element) {
    if (element > n) {
      if (static_cast<int>(blocks.size()) == d) out->emplace_back(n, blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(element);
      if (deficit() <= n - element) run(element + 1);
      blocks[i].pop_back();
    }
    if (static_cast<int>(blocks.size()) < d) {
      blocks.push_back({element});
      if (deficit() <= n - element) run(element + 1);
      blocks.pop_back();
    }
  }
};

}  // namespace

void for_each_ordered_partition(int n, int d, int r,
                                const std::function<void(const OrderedSetPartition&)>& visit) {
  check_enumeration_parameters(n, d, r);
  OrderedEnumerator e{n, d, r, std::vector<Block>(static_cast<std::size_t>(d)), &visit};
  e.run(1);
}

std::vector<OrderedSetPartition> enumerate_ordered_partitions(int n, int d, int r) {
  std::vector<OrderedSetPartition> out;
  for_each_ordered_partition(n, d, r, [&out](const OrderedSetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<OrderedSetPartition> enumerate_set_partitions(int n, int d, int r) {
  check_enumeration_parameters(n, d, r);
  std::vector<OrderedSetPartition> out;
  SetPartitionEnumerator e{n, d, r, {}, &out};
  e.run(1);
  return out;
}

namespace {

// Blocks a and b cross iff some a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2.
bool blocks_cross(const Block& a, const Block& b) {
  // Walk the merged sequence and count alternations between the two blocks;
  // a crossing is exactly an alternating pattern of length 4.
  std::size_t i = 0, j = 0;
  int last = 0;
  int runs = 0;
  while (i < a.size() || j < b.size()) {
    int owner;
    if (j >= b.size() || (i < a.size() && a[i] < b[j])) {
      owner = 1;
      ++i;
    } else {
      owner = 2;
      ++j;
    }
    if (owner != last) {
      ++runs;
      last = owner;
    }
  }
  // Runs alternate a,b,a,b... ; four runs contain x<y<z<w alternating.
  return runs >= 4;
}

}  // namespace

bool is_noncrossing(const OrderedSetPartition& pi) { return crossing_pair_count(pi) == 0; }

int crossing_pair_count(const OrderedSetPartition& pi) {
  int count = 0;
  const auto& blocks = pi.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks_cross(blocks[i], blocks[j])) ++count;
    }
  }
  return count;
}

std::vector<OrderedSetPartition> enumerate_noncrossing(int n, int d, int r) {
  auto all = enumerate_set_partitions(n, d, r);
  std::vector<OrderedSetPartition> out;
  for (auto& p : all) {
    if (is_noncrossing(p)) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Actions

OrderedSetPartition act_elements(const Permutation& w, const OrderedSetPartition& pi) {
  if (w.size() != pi.size()) {
    throw Error(ErrorKind::kSizeMismatch, "permutation and partition sizes differ");
  }
  std::vector<Block> blocks;
  blocks.reserve(pi.blocks().size());
  for (const Block& b : pi.blocks()) {
    Block image;
    image.reserve(b.size());
    for (int v : b) image.push_back(w(v));
    blocks.push_back(std::move(image));
  }
  return OrderedSetPartition(pi.size(), std::move(blocks));
}

OrderedSetPartition rotate(const OrderedSetPartition& pi) {
  return act_elements(Permutation::long_cycle(pi.size()), pi);
}

OrderedSetPartition reflect(const OrderedSetPartition& pi) {
  return act_elements(Permutation::longest_element(pi.size()), pi);
}

OrderedSetPartition permute_blocks(const Permutation& sigma, const OrderedSetPartition& pi) {
  if (sigma.size() != pi.num_blocks()) {
    throw Error(ErrorKind::kSizeMismatch, "block permutation size differs from block count");
  }
  const Permutation inv = sigma.inverse();
  std::vector<Block> blocks;
  for (int i = 1; i <= pi.num_blocks(); ++i) blocks.push_back(pi.block(inv(i)));
  return OrderedSetPartition(pi.size(), std::move(blocks));
}

std::vector<OrderedSetPartition> rotation_orbit(const OrderedSetPartition& pi) {
  std::vector<OrderedSetPartition> orbit;
  OrderedSetPartition current = pi.canonical();
  for (int step = 0; step < pi.size(); ++step) {
    if (std::find(orbit.begin(), orbit.end(), current) == orbit.end()) orbit.push_back(current);
    current = rotate(current).canonical();
  }
  return orbit;
}

bool transposition_distance_to_noncrossing(const OrderedSetPartition& pi, int k) {
  if (k < 0) throw Error(ErrorKind::kInvalidParameters, "k must be nonnegative");
  const int n = pi.size();
  std::unordered_set<OrderedSetPartition, OrderedSetPartitionHash> seen;
  std::vector<OrderedSetPartition> frontier{pi.canonical()};
  seen.insert(frontier.front());
  for (int depth = 0;; ++depth) {
    for (const auto& p : frontier) {
      if (is_noncrossing(p)) return true;
    }
    if (depth == k) return false;
    std::vector<OrderedSetPartition> next;
    for (const auto& p : frontier) {
      for (int i = 1; i < n; ++i) {
        auto q = act_elements(Permutation::simple_transposition(n, i), p).canonical();
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    if (next.empty()) return false;
    frontier = std::move(next);
  }
}

}  // namespace flamingo
