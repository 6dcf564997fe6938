#include "ashg/reference.hpp"

#include <cstdint>

namespace ashg::reference {

using kernels::BlockMode;

bool blocks(const Game& game, const Partition& partition,
            const Coalition& coalition, BlockMode mode) {
  bool some_strict = false;
  for (PlayerId i : coalition) {
    const Value now = partition_utility(game, partition, i);
    const Value there = utility(game, coalition, i);
    if (there < now) return false;
    if (there > now) some_strict = true;
    else if (mode == BlockMode::strong) return false;
  }
  if (!some_strict) return false;
  if (mode != BlockMode::contractual) return true;

  for (const Coalition& c : partition.coalitions()) {
    std::vector<PlayerId> rest;
    for (PlayerId j : c)
      if (!coalition.contains(j)) rest.push_back(j);
    if (rest.empty()) continue;
    const Coalition remainder(rest);
    for (PlayerId j : remainder)
      if (utility(game, remainder, j) < utility(game, c, j)) return false;
  }
  return true;
}

std::optional<Coalition> first_blocking(const Game& game,
                                        const Partition& partition,
                                        BlockMode mode) {
  require_matching(game, partition);
  const auto n = game.size();
  if (n > 30)
    throw Error(ErrorCode::too_large, "reference subset scan is limited to 30 players");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    const Coalition s = Coalition::from_mask(mask);
    if (blocks(game, partition, s, mode)) return s;
  }
  return std::nullopt;
}

std::optional<Partition> first_pareto_improvement(const Game& game,
                                                  const Partition& partition) {
  require_matching(game, partition);
  const auto n = game.size();
  std::vector<Value> base(n);
  for (std::size_t i = 0; i < n; ++i)
    base[i] = partition_utility(game, partition, PlayerId(i));

  std::vector<std::uint32_t> rgs(n, 0);
  do {
    const Partition candidate = Partition::from_rgs(rgs);
    bool weakly = true, strictly = false;
    for (std::size_t i = 0; i < n && weakly; ++i) {
      const Value u = partition_utility(game, candidate, PlayerId(i));
      if (u < base[i]) weakly = false;
      if (u > base[i]) strictly = true;
    }
    if (weakly && strictly) return candidate;
  } while (kernels::next_rgs(rgs));
  return std::nullopt;
}

std::optional<Partition> first_core_stable(const Game& game, bool strict) {
  const auto n = game.size();
  std::vector<std::uint32_t> rgs(n, 0);
  do {
    const Partition candidate = Partition::from_rgs(rgs);
    if (!first_blocking(game, candidate,
                        strict ? BlockMode::weak : BlockMode::strong))
      return candidate;
  } while (kernels::next_rgs(rgs));
  return std::nullopt;
}

}  // namespace ashg::reference
