#pragma once

#include <random>
#include <string>
#include <vector>

#include "ashg/game.hpp"

namespace ashg::test {

inline Partition partition_of(const Game& game,
                              const std::vector<std::vector<std::string>>& sets) {
  std::vector<std::vector<PlayerId>> ids;
  for (const auto& s : sets) {
    ids.emplace_back();
    for (const auto& label : s) ids.back().push_back(*game.find(label));
  }
  return Partition::from_sets(game, std::move(ids));
}

inline Coalition coalition_of(const Game& game, const std::vector<std::string>& labels) {
  std::vector<PlayerId> ids;
  for (const auto& l : labels) ids.push_back(*game.find(l));
  return Coalition(std::move(ids));
}

inline PlayerId id(const Game& game, const std::string& label) { return *game.find(label); }

/// Players "p0".."p{n-1}"; each ordered pair is nonzero with probability
/// `density`, drawn uniformly from [lo, hi].
inline Game random_game(std::mt19937_64& rng, std::size_t n, double density = 0.5,
                        int lo = -10, int hi = 10) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  GameBuilder b(labels);
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<int> value(lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && present(rng)) b.set(PlayerId(i), PlayerId(j), Value(value(rng)));
  return b.build();
}

/// Uniform over restricted growth strings is not uniform over partitions,
/// but it reaches every partition, which is all the property tests need.
inline Partition random_partition(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> rgs(n, 0);
  std::uint32_t top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::uint32_t> pick(0, top + 1);
    rgs[i] = pick(rng);
    top = std::max(top, rgs[i]);
  }
  return Partition::from_rgs(rgs);
}

}  // namespace ashg::test
