#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ashg/game.hpp"

namespace ashg {

// Trace events. Coalition numbers are 1-based in creation order.
struct LeaderChosen {
  PlayerId player;
  std::size_t coalition;
  friend bool operator==(const LeaderChosen&, const LeaderChosen&) = default;
};
struct HelpersAdded {
  std::size_t coalition;
  std::vector<PlayerId> players;
  friend bool operator==(const HelpersAdded&, const HelpersAdded&) = default;
};
struct NeededAdded {
  PlayerId player;
  std::size_t coalition;
  friend bool operator==(const NeededAdded&, const NeededAdded&) = default;
};
struct LatecomerJoined {
  PlayerId player;
  std::size_t coalition;
  friend bool operator==(const LatecomerJoined&, const LatecomerJoined&) = default;
};

using CisEvent = std::variant<LeaderChosen, HelpersAdded, NeededAdded, LatecomerJoined>;

struct CisTrace {
  std::vector<CisEvent> steps;
  friend bool operator==(const CisTrace&, const CisTrace&) = default;
};

/// How the next player is taken from the remaining set.
struct OrderPolicy {
  enum class Kind { lowest_index, seeded };
  Kind kind = Kind::lowest_index;
  std::uint64_t seed = 0;

  static OrderPolicy lowest_index() { return {}; }
  static OrderPolicy seeded(std::uint64_t s) { return {Kind::seeded, s}; }
};

struct CisResult {
  Partition partition;
  CisTrace trace;
};

/// Leader/helper construction in O(n^3) valuation reads. Coalitions are
/// grown around leaders: the leader's friends among the remaining players join
/// as helpers, then anyone the coalition tolerates and at least one member
/// likes is absorbed as a needed player. A later pick who is valued exactly 0
/// by every member of an earlier coalition, and prefers it to leading its own,
/// joins it as a latecomer instead.
///
/// The result need not be individually rational. It is almost always
/// contractually individually stable, but not always: a latecomer or needed
/// player joining an older coalition can make it attractive to an earlier,
/// unprotected pick that settled elsewhere. Callers that need the guarantee
/// should check with find_cis_deviation.
CisResult compute_cis(const Game& game, OrderPolicy policy = {});

/// Rebuilds the partition described by `trace`. Throws
/// Error(inconsistent_trace) if the trace does not describe a partition of
/// `game` built by the events above.
Partition replay_trace(const Game& game, const CisTrace& trace);

/// One event per line: `leader <p> <k>`, `helpers <k> <p...>`,
/// `needed <p> <k>`, `latecomer <p> <k>`.
std::string serialize_trace(const Game& game, const CisTrace& trace);
CisTrace parse_trace(const Game& game, std::string_view text);

}  // namespace ashg
