#include "ashg/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <span>
#include <variant>

namespace ashg::kernels {

namespace {

template <typename Num>
struct Matrix {
  std::size_t n = 0;
  std::vector<Num> v;  // row-major, v[i * n + j] = scaled v_i(j)

  const Num& at(std::size_t i, std::size_t j) const { return v[i * n + j]; }
};

using ScaledMatrix = std::variant<Matrix<std::int64_t>, Matrix<mpz_class>>;

ScaledMatrix scale(const Game& game) {
  const std::size_t n = game.size();
  mpz_class lcm = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              game.value(i, j).get_den_mpz_t());

  Matrix<mpz_class> big{n, std::vector<mpz_class>(n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Value& q = game.value(i, j);
      big.v[i * n + j] = q.get_num() * (lcm / q.get_den());
    }

  // Partial sums and bounds never exceed twice a row's absolute sum.
  const mpz_class limit = mpz_class(1) << 61;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row = 0;
    for (std::size_t j = 0; j < n; ++j) row += abs(big.at(i, j));
    if (row > limit) return big;
  }
  Matrix<std::int64_t> small{n, std::vector<std::int64_t>(n * n)};
  for (std::size_t k = 0; k < n * n; ++k) small.v[k] = big.v[k].get_si();
  return small;
}

template <typename Num>
std::vector<Num> current_utilities(const Matrix<Num>& m,
                                   const Partition& partition) {
  std::vector<Num> u(m.n, Num(0));
  for (const Coalition& c : partition.coalitions())
    for (PlayerId i : c)
      for (PlayerId j : c) u[i.index] += m.at(i.index, j.index);
  return u;
}

void lower_to(std::atomic<std::size_t>& best, std::size_t value) {
  std::size_t cur = best.load();
  while (value < cur && !best.compare_exchange_weak(cur, value)) {
  }
}

constexpr std::uint64_t kCancelCheckInterval = 1024;

// ---------------------------------------------------------------- subsets

template <typename Num>
struct SubsetProblem {
  const Matrix<Num>& m;
  BlockMode mode;
  std::vector<Num> target;
  std::vector<std::uint32_t> block;
  std::vector<Num> pos_prefix;       // [i * (n + 1) + b] = sum_{j<b} max(0, v_i(j))
  std::vector<Num> neg_same_prefix;  // same, min(0, v_i(j)) over j in i's block

  SubsetProblem(const Matrix<Num>& matrix, const Partition& partition,
                BlockMode block_mode)
      : m(matrix), mode(block_mode), target(current_utilities(matrix, partition)) {
    const std::size_t n = m.n, w = n + 1;
    block.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      block[i] = static_cast<std::uint32_t>(partition.block_of(PlayerId(i)));
    pos_prefix.assign(n * w, Num(0));
    neg_same_prefix.assign(n * w, Num(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < n; ++b) {
        const Num& x = m.at(i, b);
        pos_prefix[i * w + b + 1] = pos_prefix[i * w + b] + (x > 0 ? x : Num(0));
        neg_same_prefix[i * w + b + 1] =
            neg_same_prefix[i * w + b] + (x < 0 && block[b] == block[i] ? x : Num(0));
      }
  }
};

// Depth-first walk over subsets whose largest member is `top`, deciding the
// lower bits from high to low and trying "exclude" before "include". That
// visits complete subsets in ascending mask order.
template <typename Num>
class SubsetWalker {
 public:
  SubsetWalker(const SubsetProblem<Num>& problem,
               const std::atomic<std::size_t>& best)
      : p_(problem), best_(best), sum_(problem.m.n), same_(problem.m.n) {}

  std::optional<std::uint64_t> run(std::size_t top) {
    top_ = top;
    mask_ = 0;
    aborted_ = false;
    std::fill(sum_.begin(), sum_.end(), Num(0));
    std::fill(same_.begin(), same_.end(), Num(0));
    include(top);
    if (dfs(top)) return mask_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t b) {
    if (++nodes_ % kCancelCheckInterval == 0 && best_.load(std::memory_order_relaxed) < top_)
      aborted_ = true;
    if (aborted_ || !feasible(b)) return false;
    if (b == 0) return accept();
    if (dfs(b - 1)) return true;
    include(b - 1);
    if (dfs(b - 1)) return true;
    exclude(b - 1);
    return false;
  }

  // Undecided players are exactly those with index < b.
  bool feasible(std::size_t b) const {
    const std::size_t n = p_.m.n, w = n + 1;
    for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      bound_ = sum_[i];
      bound_ += p_.pos_prefix[i * w + b];
      if (p_.mode == BlockMode::strong ? bound_ <= p_.target[i]
                                       : bound_ < p_.target[i])
        return false;
    }
    if (p_.mode == BlockMode::contractual) {
      // An outsider j loses iff the members leaving its coalition are worth
      // more than zero to it in total.
      for (std::size_t j = b; j < n; ++j) {
        if (mask_ >> j & 1u) continue;
        bound_ = same_[j];
        bound_ += p_.neg_same_prefix[j * w + b];
        if (bound_ > 0) return false;
      }
    }
    return true;
  }

  bool accept() const {
    if (p_.mode == BlockMode::strong) return true;
    for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if (sum_[i] > p_.target[i]) return true;
    }
    return false;
  }

  void include(std::size_t j) {
    mask_ |= std::uint64_t{1} << j;
    const std::size_t n = p_.m.n;
    const auto bj = p_.block[j];
    for (std::size_t i = 0; i < n; ++i) {
      const Num& x = p_.m.at(i, j);
      sum_[i] += x;
      if (p_.block[i] == bj) same_[i] += x;
    }
  }

  void exclude(std::size_t j) {
    mask_ &= ~(std::uint64_t{1} << j);
    const std::size_t n = p_.m.n;
    const auto bj = p_.block[j];
    for (std::size_t i = 0; i < n; ++i) {
      const Num& x = p_.m.at(i, j);
      sum_[i] -= x;
      if (p_.block[i] == bj) same_[i] -= x;
    }
  }

  const SubsetProblem<Num>& p_;
  const std::atomic<std::size_t>& best_;
  std::vector<Num> sum_;   // sum_[i] = sum over members j of v_i(j)
  std::vector<Num> same_;  // as sum_, restricted to members in i's block
  mutable Num bound_{0};
  std::uint64_t mask_ = 0;
  std::uint64_t nodes_ = 0;
  std::size_t top_ = 0;
  bool aborted_ = false;
};

template <typename Num>
std::optional<std::uint64_t> search_subsets(const Matrix<Num>& m,
                                            const Partition& partition,
                                            BlockMode mode, int threads) {
  const SubsetProblem<Num> problem(m, partition, mode);
  const std::size_t n = m.n;
  std::atomic<std::size_t> best{n};
  std::vector<std::optional<std::uint64_t>> found(n);

#pragma omp parallel num_threads(resolve_threads(threads))
  {
    SubsetWalker<Num> walker(problem, best);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t top = 0; top < n; ++top) {
      if (best.load() < top) continue;
      if (auto r = walker.run(top)) {
        found[top] = r;
        lower_to(best, top);
      }
    }
  }
  if (best.load() < n) return found[best.load()];
  return std::nullopt;
}

// ------------------------------------------------------------- partitions

template <typename Num>
struct PartitionProblem {
  const Matrix<Num>& m;
  std::vector<Num> target;
  std::vector<Num> pos_suffix;  // [i * (n + 1) + q] = sum_{j>=q} max(0, v_i(j))

  PartitionProblem(const Matrix<Num>& matrix, const Partition& partition)
      : m(matrix), target(current_utilities(matrix, partition)) {
    const std::size_t n = m.n, w = n + 1;
    pos_suffix.assign(n * w, Num(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t q = n; q-- > 0;) {
        const Num& x = m.at(i, q);
        pos_suffix[i * w + q] = pos_suffix[i * w + q + 1] + (x > 0 ? x : Num(0));
      }
  }
};

// Assigns players 0, 1, ... to blocks, trying labels in ascending order, so
// complete assignments come out in lexicographic RGS order.
template <typename Num>
class RgsWalker {
 public:
  RgsWalker(const PartitionProblem<Num>& problem,
            const std::atomic<std::size_t>& best, std::size_t task)
      : p_(problem), best_(best), task_(task), rgs_(problem.m.n, 0),
        sum_(problem.m.n, Num(0)) {}

  bool seed(std::span<const std::uint32_t> prefix) {
    for (std::size_t q = 0; q < prefix.size(); ++q) {
      assign(q, prefix[q]);
      if (!feasible(q + 1)) return false;
    }
    return true;
  }

  bool dfs(std::size_t q) {
    if (++nodes_ % kCancelCheckInterval == 0 && best_.load(std::memory_order_relaxed) < task_)
      aborted_ = true;
    if (aborted_) return false;
    if (q == p_.m.n) return accept();
    const auto labels = static_cast<std::uint32_t>(blocks_.size());
    for (std::uint32_t c = 0; c <= labels; ++c) {
      assign(q, c);
      if (feasible(q + 1) && dfs(q + 1)) return true;
      unassign(q);
    }
    return false;
  }

  const std::vector<std::uint32_t>& rgs() const { return rgs_; }

 private:
  void assign(std::size_t q, std::uint32_t c) {
    rgs_[q] = c;
    if (c == blocks_.size()) blocks_.emplace_back();
    sum_[q] = 0;
    for (auto member : blocks_[c]) {
      sum_[member] += p_.m.at(member, q);
      sum_[q] += p_.m.at(q, member);
    }
    blocks_[c].push_back(static_cast<std::uint32_t>(q));
  }

  void unassign(std::size_t q) {
    const auto c = rgs_[q];
    blocks_[c].pop_back();
    for (auto member : blocks_[c]) sum_[member] -= p_.m.at(member, q);
    if (blocks_[c].empty()) blocks_.pop_back();
  }

  // Players >= q are unassigned and can add at most their positive values.
  bool feasible(std::size_t q) const {
    const std::size_t w = p_.m.n + 1;
    for (std::size_t i = 0; i < q; ++i) {
      bound_ = sum_[i];
      bound_ += p_.pos_suffix[i * w + q];
      if (bound_ < p_.target[i]) return false;
    }
    return true;
  }

  bool accept() const {
    for (std::size_t i = 0; i < p_.m.n; ++i)
      if (sum_[i] > p_.target[i]) return true;
    return false;
  }

  const PartitionProblem<Num>& p_;
  const std::atomic<std::size_t>& best_;
  std::size_t task_;
  std::vector<std::uint32_t> rgs_;
  std::vector<std::vector<std::uint32_t>> blocks_;
  std::vector<Num> sum_;
  mutable Num bound_{0};
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

constexpr std::size_t kPrefixDepth = 6;

template <typename Num>
std::optional<std::vector<std::uint32_t>> search_partitions(
    const Matrix<Num>& m, const Partition& partition, int threads) {
  const PartitionProblem<Num> problem(m, partition);
  const std::size_t n = m.n;
  const std::size_t depth = std::min(n, kPrefixDepth);

  std::vector<std::vector<std::uint32_t>> prefixes;
  std::vector<std::uint32_t> prefix(depth, 0);
  do prefixes.push_back(prefix);
  while (next_rgs(prefix));

  const std::size_t tasks = prefixes.size();
  std::atomic<std::size_t> best{tasks};
  std::vector<std::optional<std::vector<std::uint32_t>>> found(tasks);

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
  for (std::size_t t = 0; t < tasks; ++t) {
    if (best.load() < t) continue;
    RgsWalker<Num> walker(problem, best, t);
    if (walker.seed(prefixes[t]) && walker.dfs(depth)) {
      found[t] = walker.rgs();
      lower_to(best, t);
    }
  }
  if (best.load() < tasks) return found[best.load()];
  return std::nullopt;
}

}  // namespace

struct BlockingSearch::Impl {
  ScaledMatrix matrix;
};

BlockingSearch::BlockingSearch(const Game& game)
    : impl_(std::make_unique<Impl>(Impl{scale(game)})) {
  if (game.size() > max_subset_players)
    throw Error(ErrorCode::too_large,
                "subset search supports at most " +
                    std::to_string(max_subset_players) + " players");
}

BlockingSearch::~BlockingSearch() = default;
BlockingSearch::BlockingSearch(BlockingSearch&&) noexcept = default;
BlockingSearch& BlockingSearch::operator=(BlockingSearch&&) noexcept = default;

std::optional<std::uint64_t> BlockingSearch::first(const Partition& partition,
                                                   BlockMode mode,
                                                   int threads) const {
  return std::visit(
      [&](const auto& m) {
        if (partition.player_count() != m.n)
          throw Error(ErrorCode::invalid_partition,
                      "partition does not match the game");
        return search_subsets(m, partition, mode, threads);
      },
      impl_->matrix);
}

bool BlockingSearch::uses_native_integers() const {
  return std::holds_alternative<Matrix<std::int64_t>>(impl_->matrix);
}

std::optional<std::vector<std::uint32_t>> first_dominating_rgs(
    const Game& game, const Partition& partition, int threads) {
  require_matching(game, partition);
  const ScaledMatrix matrix = scale(game);
  return std::visit(
      [&](const auto& m) { return search_partitions(m, partition, threads); },
      matrix);
}

bool next_rgs(std::vector<std::uint32_t>& rgs) {
  // prefix_max[i] = max(rgs[0..i-1]); position i can grow while rgs[i] <= it.
  const std::size_t n = rgs.size();
  std::vector<std::uint32_t> prefix_max(n, 0);
  for (std::size_t i = 1; i < n; ++i)
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i - 1]);
  for (std::size_t i = n; i-- > 1;) {
    if (rgs[i] <= prefix_max[i]) {
      ++rgs[i];
      std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0u);
      return true;
    }
  }
  return false;
}

int resolve_threads(int requested) {
  return requested > 0 ? requested : omp_get_max_threads();
}

}  // namespace ashg::kernels
