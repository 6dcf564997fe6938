#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ashg/game.hpp"

namespace ashg {

enum class Concept { ns, is, cis, core, strict_core, csc, pareto, ir };

std::string_view to_string(Concept c);
std::optional<Concept> parse_concept(std::string_view name);

/// A single player leaving `from`. An empty `to` means forming a new
/// singleton coalition.
struct DeviationMove {
  PlayerId player;
  Coalition from;
  std::optional<Coalition> to;

  friend bool operator==(const DeviationMove&, const DeviationMove&) = default;
};

enum class BlockKind { strong, weak };

struct BlockingWitness {
  Coalition coalition;
  BlockKind kind;
  std::vector<PlayerId> strictly_better;

  friend bool operator==(const BlockingWitness&, const BlockingWitness&) = default;
};

struct StabilityVerdict {
  std::variant<std::monostate, DeviationMove, BlockingWitness, Partition> witness;

  bool stable() const { return std::holds_alternative<std::monostate>(witness); }
};

struct SearchOptions {
  std::size_t subset_cap = 26;
  std::size_t partition_cap = 12;
  int threads = 0;  // <= 0: OpenMP default
};

// Single-player deviations. Players are scanned by index; each player's
// targets in the partition's canonical coalition order, the empty target last.
std::optional<DeviationMove> find_nash_deviation(const Game& game,
                                                 const Partition& partition);
/// Also requires every member of the target to value the mover at >= 0.
std::optional<DeviationMove> find_is_deviation(const Game& game,
                                               const Partition& partition);
/// Also requires every other member of the source to value the mover at <= 0.
std::optional<DeviationMove> find_cis_deviation(const Game& game,
                                                const Partition& partition);

// Coalition searches return the blocking coalition with the smallest
// characteristic mask. Throw Error(too_large) beyond options.subset_cap.
std::optional<BlockingWitness> find_strongly_blocking(
    const Game& game, const Partition& partition, const SearchOptions& options = {});
std::optional<BlockingWitness> find_weakly_blocking(
    const Game& game, const Partition& partition, const SearchOptions& options = {});
/// A weakly blocking coalition whose departure leaves every outsider at least
/// as well off: for each C in the partition and j in C \ S, u(C \ S, j) >= u(C, j).
std::optional<BlockingWitness> find_csc_violation(
    const Game& game, const Partition& partition, const SearchOptions& options = {});

/// First partition (restricted growth string order) that Pareto dominates
/// `partition`. Throws Error(too_large) beyond options.partition_cap.
std::optional<Partition> find_pareto_improvement(
    const Game& game, const Partition& partition, const SearchOptions& options = {});

StabilityVerdict verify(const Game& game, const Partition& partition,
                        Concept which, const SearchOptions& options = {});

enum class CoreVariant { core, strict_core };

/// First partition in restricted growth string order that is core (or strict
/// core) stable; nothing if that set is empty.
std::optional<Partition> core_exists(const Game& game,
                                     CoreVariant variant = CoreVariant::core,
                                     const SearchOptions& options = {});

}  // namespace ashg
