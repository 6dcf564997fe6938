#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ashg/error.hpp"
#include "ashg/value.hpp"

namespace ashg {

/// Dense 0-based player index. Labels live in the owning Game.
struct PlayerId {
  std::uint32_t index = 0;

  constexpr PlayerId() = default;
  constexpr explicit PlayerId(std::size_t i)
      : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(PlayerId, PlayerId) = default;
};

/// An additively separable hedonic game: labelled players and an exact
/// valuation matrix with v_i(i) = 0.
class Game {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::string& label(PlayerId p) const { return labels_.at(p.index); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<PlayerId> find(std::string_view label) const;
  bool contains(PlayerId p) const { return p.index < labels_.size(); }

  /// v_from(to)
  const Value& value(PlayerId from, PlayerId to) const {
    return values_[from.index * size() + to.index];
  }
  const Value& value(std::size_t from, std::size_t to) const {
    return values_[from * size() + to];
  }

  /// Value that unspecified off-diagonal pairs took at construction. Only
  /// affects serialization.
  const Value& default_value() const { return default_; }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  friend class GameBuilder;
  std::vector<std::string> labels_;
  std::vector<Value> values_;
  Value default_;
};

class GameBuilder {
 public:
  /// Throws on an empty player list, duplicate labels, or labels that
  /// contain whitespace or '#'.
  explicit GameBuilder(std::vector<std::string> labels);

  /// Sets the value of every off-diagonal pair not explicitly set.
  GameBuilder& set_default(Value v);
  /// Throws on unknown players or a nonzero self-valuation.
  GameBuilder& set(PlayerId from, PlayerId to, Value v);
  GameBuilder& set(std::string_view from, std::string_view to, Value v);
  /// Sets both v_a(b) and v_b(a).
  GameBuilder& set_symmetric(PlayerId a, PlayerId b, const Value& v);
  bool is_set(PlayerId from, PlayerId to) const;
  PlayerId id(std::string_view label) const;

  Game build() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<Value>> explicit_;
  Value default_;
};

/// Nonempty set of players, sorted by index.
class Coalition {
 public:
  /// Sorts and deduplicates. Throws Error(empty_coalition) if empty.
  explicit Coalition(std::vector<PlayerId> members);
  Coalition(std::initializer_list<PlayerId> members)
      : Coalition(std::vector<PlayerId>(members)) {}

  static Coalition from_mask(std::uint64_t mask);

  const std::vector<PlayerId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(PlayerId p) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  PlayerId front() const { return members_.front(); }

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::vector<PlayerId> members_;
};

/// A partition of a game's players. Coalitions are kept in canonical order
/// (ascending by smallest member), which is also the order targets are
/// scanned in by the deviation finders.
class Partition {
 public:
  /// Validates against `game`; throws Error with the code reported by
  /// validate_partition.
  static Partition from_sets(const Game& game,
                             std::vector<std::vector<PlayerId>> sets);
  static Partition singletons(std::size_t n);
  static Partition grand(std::size_t n);
  /// Restricted growth string: rgs[i] is the block label of player i.
  static Partition from_rgs(std::span<const std::uint32_t> rgs);

  std::size_t player_count() const { return block_of_.size(); }
  const std::vector<Coalition>& coalitions() const { return coalitions_; }
  std::size_t block_of(PlayerId p) const { return block_of_.at(p.index); }
  const Coalition& coalition_of(PlayerId p) const {
    return coalitions_[block_of(p)];
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<Coalition> coalitions);
  std::vector<Coalition> coalitions_;
  std::vector<std::uint32_t> block_of_;
};

struct PartitionIssue {
  ErrorCode code;
  std::optional<PlayerId> player;
};

/// Reports the first problem with a candidate set system, or nothing if it
/// partitions the game's players. Checks run per coalition in input order:
/// empty coalition, unknown player, duplicate; missing players last.
std::optional<PartitionIssue> validate_partition(
    const Game& game, std::span<const std::vector<PlayerId>> sets);

/// Sum of v_player(j) over the other members of `coalition`.
Value utility(const Game& game, const Coalition& coalition, PlayerId player);
Value partition_utility(const Game& game, const Partition& partition,
                        PlayerId player);

/// F(player, pool): members of `pool` that `player` values positively.
std::vector<PlayerId> friends(const Game& game, PlayerId player,
                              std::span<const PlayerId> pool);

bool is_symmetric(const Game& game);
bool is_strict(const Game& game);

/// Lowest-index player with negative utility, if any.
std::optional<PlayerId> find_irrational_player(const Game& game,
                                               const Partition& partition);
inline bool is_individually_rational(const Game& game,
                                     const Partition& partition) {
  return !find_irrational_player(game, partition).has_value();
}

/// Throws Error(invalid_partition) if the partition was built for a game of
/// a different size.
void require_matching(const Game& game, const Partition& partition);

}  // namespace ashg
