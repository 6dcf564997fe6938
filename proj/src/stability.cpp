#include "ashg/stability.hpp"

#include <array>

#include "ashg/kernels.hpp"

namespace ashg {

namespace {

using kernels::BlockMode;

enum class MoveRule { nash, individual, contractual };

std::optional<DeviationMove> find_move(const Game& game,
                                       const Partition& partition,
                                       MoveRule rule) {
  require_matching(game, partition);
  const auto& coalitions = partition.coalitions();
  for (std::size_t p = 0; p < game.size(); ++p) {
    const PlayerId mover(p);
    const std::size_t home = partition.block_of(mover);
    const Coalition& from = coalitions[home];
    const Value current = utility(game, from, mover);

    if (rule == MoveRule::contractual) {
      bool released = true;
      for (PlayerId j : from)
        if (j != mover && game.value(j, mover) > 0) released = false;
      if (!released) continue;
    }

    for (std::size_t k = 0; k < coalitions.size(); ++k) {
      if (k == home) continue;
      const Coalition& to = coalitions[k];
      Value gain;
      bool admitted = true;
      for (PlayerId j : to) {
        gain += game.value(mover, j);
        if (rule != MoveRule::nash && game.value(j, mover) < 0) admitted = false;
      }
      if (gain > current && admitted) return DeviationMove{mover, from, to};
    }
    if (current < 0) return DeviationMove{mover, from, std::nullopt};
  }
  return std::nullopt;
}

void require_subset_cap(const Game& game, const SearchOptions& options) {
  const auto cap = std::min(options.subset_cap, kernels::max_subset_players);
  if (game.size() > cap)
    throw Error(ErrorCode::too_large, "subset search over " +
                                          std::to_string(game.size()) +
                                          " players exceeds cap " +
                                          std::to_string(cap));
}

void require_partition_cap(const Game& game, const SearchOptions& options) {
  if (game.size() > options.partition_cap)
    throw Error(ErrorCode::too_large, "partition search over " +
                                          std::to_string(game.size()) +
                                          " players exceeds cap " +
                                          std::to_string(options.partition_cap));
}

BlockingWitness make_witness(const Game& game, const Partition& partition,
                             std::uint64_t mask, BlockKind kind) {
  Coalition s = Coalition::from_mask(mask);
  std::vector<PlayerId> better;
  for (PlayerId i : s)
    if (utility(game, s, i) > partition_utility(game, partition, i))
      better.push_back(i);
  return BlockingWitness{std::move(s), kind, std::move(better)};
}

std::optional<BlockingWitness> find_blocking(const Game& game,
                                             const Partition& partition,
                                             const SearchOptions& options,
                                             BlockMode mode) {
  require_matching(game, partition);
  require_subset_cap(game, options);
  const kernels::BlockingSearch search(game);
  const auto mask = search.first(partition, mode, options.threads);
  if (!mask) return std::nullopt;
  return make_witness(game, partition, *mask,
                      mode == BlockMode::strong ? BlockKind::strong : BlockKind::weak);
}

constexpr std::array<std::pair<Concept, std::string_view>, 8> kConceptNames{{
    {Concept::ns, "ns"},
    {Concept::is, "is"},
    {Concept::cis, "cis"},
    {Concept::core, "core"},
    {Concept::strict_core, "strict-core"},
    {Concept::csc, "csc"},
    {Concept::pareto, "pareto"},
    {Concept::ir, "ir"},
}};

}  // namespace

std::string_view to_string(Concept c) {
  for (const auto& [k, name] : kConceptNames)
    if (k == c) return name;
  return "?";
}

std::optional<Concept> parse_concept(std::string_view name) {
  for (const auto& [k, n] : kConceptNames)
    if (n == name) return k;
  return std::nullopt;
}

std::optional<DeviationMove> find_nash_deviation(const Game& game,
                                                 const Partition& partition) {
  return find_move(game, partition, MoveRule::nash);
}

std::optional<DeviationMove> find_is_deviation(const Game& game,
                                               const Partition& partition) {
  return find_move(game, partition, MoveRule::individual);
}

std::optional<DeviationMove> find_cis_deviation(const Game& game,
                                                const Partition& partition) {
  return find_move(game, partition, MoveRule::contractual);
}

std::optional<BlockingWitness> find_strongly_blocking(
    const Game& game, const Partition& partition, const SearchOptions& options) {
  return find_blocking(game, partition, options, BlockMode::strong);
}

std::optional<BlockingWitness> find_weakly_blocking(
    const Game& game, const Partition& partition, const SearchOptions& options) {
  return find_blocking(game, partition, options, BlockMode::weak);
}

std::optional<BlockingWitness> find_csc_violation(
    const Game& game, const Partition& partition, const SearchOptions& options) {
  return find_blocking(game, partition, options, BlockMode::contractual);
}

std::optional<Partition> find_pareto_improvement(
    const Game& game, const Partition& partition, const SearchOptions& options) {
  require_matching(game, partition);
  require_partition_cap(game, options);
  auto rgs = kernels::first_dominating_rgs(game, partition, options.threads);
  if (!rgs) return std::nullopt;
  return Partition::from_rgs(*rgs);
}

StabilityVerdict verify(const Game& game, const Partition& partition,
                        Concept which, const SearchOptions& options) {
  StabilityVerdict verdict;
  auto take = [&](auto&& found) {
    if (found) verdict.witness = std::move(*found);
  };
  switch (which) {
    case Concept::ns: take(find_nash_deviation(game, partition)); break;
    case Concept::is: take(find_is_deviation(game, partition)); break;
    case Concept::cis: take(find_cis_deviation(game, partition)); break;
    case Concept::core: take(find_strongly_blocking(game, partition, options)); break;
    case Concept::strict_core: take(find_weakly_blocking(game, partition, options)); break;
    case Concept::csc: take(find_csc_violation(game, partition, options)); break;
    case Concept::pareto: take(find_pareto_improvement(game, partition, options)); break;
    case Concept::ir:
      if (auto p = find_irrational_player(game, partition))
        verdict.witness = DeviationMove{*p, partition.coalition_of(*p), std::nullopt};
      break;
  }
  return verdict;
}

std::optional<Partition> core_exists(const Game& game, CoreVariant variant,
                                     const SearchOptions& options) {
  require_partition_cap(game, options);
  require_subset_cap(game, options);
  const kernels::BlockingSearch search(game);
  const BlockMode mode =
      variant == CoreVariant::core ? BlockMode::strong : BlockMode::weak;
  std::vector<std::uint32_t> rgs(game.size(), 0);
  do {
    Partition candidate = Partition::from_rgs(rgs);
    if (!search.first(candidate, mode, options.threads)) return candidate;
  } while (kernels::next_rgs(rgs));
  return std::nullopt;
}

}  // namespace ashg
