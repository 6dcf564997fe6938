#pragma once

// Exhaustive search kernels behind the stability verifiers.
//
// Both searches return the enumeration-order-minimal witness:
//  - subsets in ascending characteristic-mask order,
//  - partitions in lexicographic restricted-growth-string order,
// regardless of the number of OpenMP threads. The subtrees they skip are
// provably witness-free, so the result is the one a plain scan would find
// (see ashg/reference.hpp, which is that plain scan).
//
// Valuations are scaled by the lcm of their denominators. When every row's
// absolute sum fits comfortably in 62 bits the kernels run on int64_t,
// otherwise on mpz_class.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ashg/game.hpp"

namespace ashg::kernels {

enum class BlockMode {
  strong,       // every member strictly better off
  weak,         // every member weakly, at least one strictly
  contractual,  // weak, and no outsider loses from the break-off
};

/// Largest player count the subset kernel can represent.
inline constexpr std::size_t max_subset_players = 63;

class BlockingSearch {
 public:
  explicit BlockingSearch(const Game& game);
  ~BlockingSearch();
  BlockingSearch(BlockingSearch&&) noexcept;
  BlockingSearch& operator=(BlockingSearch&&) noexcept;

  /// Mask-order-minimal blocking coalition of `partition`, as a bit mask over
  /// player indices. `threads` <= 0 uses the OpenMP default.
  std::optional<std::uint64_t> first(const Partition& partition, BlockMode mode,
                                     int threads = 0) const;

  bool uses_native_integers() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Lexicographically first restricted growth string whose partition weakly
/// improves every player's utility over `partition` and strictly improves at
/// least one.
std::optional<std::vector<std::uint32_t>> first_dominating_rgs(
    const Game& game, const Partition& partition, int threads = 0);

/// Advances `rgs` to the next restricted growth string in lexicographic
/// order. Returns false after the last one (all blocks singletons).
bool next_rgs(std::vector<std::uint32_t>& rgs);

int resolve_threads(int requested);

}  // namespace ashg::kernels
