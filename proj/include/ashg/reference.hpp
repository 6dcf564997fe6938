#pragma once

// Serial brute-force implementations of the exhaustive searches. They follow
// the definitions literally (exact rationals, no pruning, no scaling) and are
// kept as the test oracle and benchmark baseline for ashg/kernels.hpp.

#include <optional>

#include "ashg/game.hpp"
#include "ashg/kernels.hpp"

namespace ashg::reference {

/// Scans masks 1, 2, ..., 2^n - 1. Requires n <= 30.
std::optional<Coalition> first_blocking(const Game& game,
                                        const Partition& partition,
                                        kernels::BlockMode mode);

/// Scans every partition in restricted-growth-string order.
std::optional<Partition> first_pareto_improvement(const Game& game,
                                                  const Partition& partition);

/// First partition admitting no strongly (strict = false) or weakly
/// (strict = true) blocking coalition.
std::optional<Partition> first_core_stable(const Game& game, bool strict);

bool blocks(const Game& game, const Partition& partition,
            const Coalition& coalition, kernels::BlockMode mode);

}  // namespace ashg::reference
