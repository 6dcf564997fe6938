#include "ashg/game.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ashg {

namespace {

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == '#' || std::isspace(static_cast<unsigned char>(c));
  });
}

void require_player(const Game& game, PlayerId p) {
  if (!game.contains(p))
    throw Error(ErrorCode::unknown_player,
                "unknown player index " + std::to_string(p.index));
}

}  // namespace

std::optional<PlayerId> Game::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return PlayerId(i);
  return std::nullopt;
}

GameBuilder::GameBuilder(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::empty_game, "game has no players");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!valid_label(l))
      throw Error(ErrorCode::parse, "invalid player label '" + l + "'");
    if (!seen.insert(l).second)
      throw Error(ErrorCode::parse, "duplicate player label '" + l + "'");
  }
  explicit_.resize(labels_.size() * labels_.size());
}

GameBuilder& GameBuilder::set_default(Value v) {
  v.canonicalize();
  default_ = std::move(v);
  return *this;
}

GameBuilder& GameBuilder::set(PlayerId from, PlayerId to, Value v) {
  v.canonicalize();
  const auto n = labels_.size();
  if (from.index >= n || to.index >= n)
    throw Error(ErrorCode::unknown_player, "valuation references unknown player");
  if (from == to) {
    if (v != 0)
      throw Error(ErrorCode::parse,
                  "nonzero self-valuation for '" + labels_[from.index] + "'");
    return *this;
  }
  explicit_[from.index * n + to.index] = std::move(v);
  return *this;
}

GameBuilder& GameBuilder::set(std::string_view from, std::string_view to,
                              Value v) {
  return set(id(from), id(to), std::move(v));
}

GameBuilder& GameBuilder::set_symmetric(PlayerId a, PlayerId b,
                                        const Value& v) {
  set(a, b, v);
  return set(b, a, v);
}

bool GameBuilder::is_set(PlayerId from, PlayerId to) const {
  return explicit_.at(from.index * labels_.size() + to.index).has_value();
}

PlayerId GameBuilder::id(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return PlayerId(i);
  throw Error(ErrorCode::unknown_player,
              "unknown player '" + std::string(label) + "'");
}

Game GameBuilder::build() const {
  Game g;
  const auto n = labels_.size();
  g.labels_ = labels_;
  g.default_ = default_;
  g.values_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& e = explicit_[i * n + j];
      g.values_[i * n + j] = e ? *e : default_;
    }
  return g;
}

Coalition::Coalition(std::vector<PlayerId> members)
    : members_(std::move(members)) {
  if (members_.empty())
    throw Error(ErrorCode::empty_coalition, "coalition is empty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Coalition Coalition::from_mask(std::uint64_t mask) {
  std::vector<PlayerId> m;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) m.emplace_back(i);
  return Coalition(std::move(m));
}

bool Coalition::contains(PlayerId p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

Partition::Partition(std::vector<Coalition> coalitions)
    : coalitions_(std::move(coalitions)) {
  std::sort(coalitions_.begin(), coalitions_.end(),
            [](const Coalition& a, const Coalition& b) {
              return a.front() < b.front();
            });
  std::size_t n = 0;
  for (const auto& c : coalitions_) n += c.size();
  block_of_.assign(n, 0);
  for (std::size_t k = 0; k < coalitions_.size(); ++k)
    for (PlayerId p : coalitions_[k]) block_of_[p.index] = static_cast<std::uint32_t>(k);
}

Partition Partition::from_sets(const Game& game,
                               std::vector<std::vector<PlayerId>> sets) {
  if (auto issue = validate_partition(game, sets)) {
    std::string msg(to_string(issue->code));
    if (issue->player) msg += "(" + game.label(*issue->player) + ")";
    throw Error(issue->code, msg);
  }
  std::vector<Coalition> cs;
  cs.reserve(sets.size());
  for (auto& s : sets) cs.emplace_back(std::move(s));
  return Partition(std::move(cs));
}

Partition Partition::singletons(std::size_t n) {
  std::vector<Coalition> cs;
  for (std::size_t i = 0; i < n; ++i) cs.push_back(Coalition{PlayerId(i)});
  return Partition(std::move(cs));
}

Partition Partition::grand(std::size_t n) {
  std::vector<PlayerId> all;
  for (std::size_t i = 0; i < n; ++i) all.emplace_back(i);
  return Partition({Coalition(std::move(all))});
}

Partition Partition::from_rgs(std::span<const std::uint32_t> rgs) {
  std::vector<std::vector<PlayerId>> blocks;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] >= blocks.size()) blocks.resize(rgs[i] + 1);
    blocks[rgs[i]].emplace_back(i);
  }
  std::vector<Coalition> cs;
  for (auto& b : blocks)
    if (!b.empty()) cs.emplace_back(std::move(b));
  return Partition(std::move(cs));
}

std::optional<PartitionIssue> validate_partition(
    const Game& game, std::span<const std::vector<PlayerId>> sets) {
  std::vector<bool> seen(game.size(), false);
  for (const auto& s : sets) {
    if (s.empty()) return PartitionIssue{ErrorCode::empty_coalition, {}};
    for (PlayerId p : s) {
      if (!game.contains(p)) return PartitionIssue{ErrorCode::unknown_player, p};
      if (seen[p.index]) return PartitionIssue{ErrorCode::duplicate_player, p};
      seen[p.index] = true;
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) return PartitionIssue{ErrorCode::missing_player, PlayerId(i)};
  return std::nullopt;
}

void require_matching(const Game& game, const Partition& partition) {
  if (partition.player_count() != game.size())
    throw Error(ErrorCode::invalid_partition,
                "partition covers " + std::to_string(partition.player_count()) +
                    " players, game has " + std::to_string(game.size()));
}

Value utility(const Game& game, const Coalition& coalition, PlayerId player) {
  require_player(game, player);
  for (PlayerId j : coalition) require_player(game, j);
  if (!coalition.contains(player))
    throw Error(ErrorCode::player_not_in_coalition,
                "player '" + game.label(player) + "' is not in the coalition");
  Value sum;
  for (PlayerId j : coalition) sum += game.value(player, j);
  return sum;
}

Value partition_utility(const Game& game, const Partition& partition,
                        PlayerId player) {
  require_matching(game, partition);
  require_player(game, player);
  return utility(game, partition.coalition_of(player), player);
}

std::vector<PlayerId> friends(const Game& game, PlayerId player,
                              std::span<const PlayerId> pool) {
  require_player(game, player);
  std::vector<PlayerId> out;
  for (PlayerId j : pool) {
    require_player(game, j);
    if (game.value(player, j) > 0) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_symmetric(const Game& game) {
  const auto n = game.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (game.value(i, j) != game.value(j, i)) return false;
  return true;
}

bool is_strict(const Game& game) {
  const auto n = game.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && game.value(i, j) == 0) return false;
  return true;
}

std::optional<PlayerId> find_irrational_player(const Game& game,
                                               const Partition& partition) {
  require_matching(game, partition);
  for (std::size_t i = 0; i < game.size(); ++i)
    if (partition_utility(game, partition, PlayerId(i)) < 0) return PlayerId(i);
  return std::nullopt;
}

}  // namespace ashg
