#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ashg/game.hpp"

namespace ashg::gadgets {

/// Exact Cover by 3-Sets: a universe of 3m labelled elements and a list of
/// triples given as element indices.
struct E3cInstance {
  std::vector<std::string> universe;
  std::vector<std::array<std::size_t, 3>> triples;

  /// Throws Error(invalid_instance). With `bounded_occurrence`, also rejects
  /// elements that occur in more than three triples.
  void validate(bool bounded_occurrence = true) const;
};

/// `universe <labels...>` followed by `set <a> <b> <c>` lines.
E3cInstance parse_e3c(std::string_view text);

struct PartitionInstance {
  std::vector<std::uint64_t> weights;

  std::uint64_t total() const;
  void validate() const;  // throws Error(invalid_instance) on a zero weight
};

/// Comma-separated (`1,1,2`) or whitespace/newline-separated integers.
PartitionInstance parse_weights(std::string_view text);

struct GadgetGame {
  Game game;
  std::map<std::string, PlayerId> labeling;  // gadget role -> player

  PlayerId role(const std::string& name) const { return labeling.at(name); }
};

/// The six-player symmetric game with an empty core: players "1".."6",
/// weights 6 on {1,2},{3,4},{5,6}; 5 on {1,6},{2,3},{4,5}; 4 on {1,3},{3,5},{1,5};
/// -33 elsewhere.
Game example_six_player();

/// Symmetric game with a hexagon x1_r..x6_r per element r (the six-player
/// weights), and per triple s = {k,l,m} a player y_s valued 41/4 by x6_k,
/// x6_l, x6_m, which value each other 1/2. Every other pair is -33.
GadgetGame reduce_e3c(const E3cInstance& instance);

/// Pairs {x1_r, x2_r}, triples {x3_r, x4_r, x5_r}, each covering triple's
/// y_s with its three x6 players, and the unused y_s alone.
/// Throws Error(not_a_cover) unless `cover` is an exact cover.
Partition witness_partition_e3c(const E3cInstance& instance,
                                const GadgetGame& gadget,
                                const std::vector<std::size_t>& cover);

/// Lexicographically first exact cover (as sorted triple indices).
/// Throws Error(too_large) when there are more than `cap` triples.
std::optional<std::vector<std::size_t>> solve_e3c(const E3cInstance& instance,
                                                  std::size_t cap = 24);

bool is_exact_cover(const E3cInstance& instance,
                    const std::vector<std::size_t>& cover);

struct PartitionGadget {
  GadgetGame gadget;
  Partition grand;
};

/// Players x1, x2, y1, y2, z1..zk with
///   v_x(y) = W/2 for x in {x1,x2}, y in {y1,y2};  v_x(z_i) = a_i;
///   v_x1(x2) = v_x2(x1) = v_y1(y2) = v_y2(y1) = -W;  0 otherwise.
PartitionGadget reduce_partition(const PartitionInstance& instance);

/// {{x1, y1} + {z_i : i in side}, {x2, y2} + the other z_i}. Throws
/// Error(not_an_equal_split) unless the side's weights sum to W/2.
Partition witness_partition_split(const PartitionInstance& instance,
                                  const GadgetGame& gadget,
                                  const std::vector<std::size_t>& side);

/// First subset, by ascending characteristic mask, with weight W/2.
/// Throws Error(too_large) beyond `cap` weights.
std::optional<std::vector<std::size_t>> solve_partition(
    const PartitionInstance& instance, std::size_t cap = 30);

}  // namespace ashg::gadgets
