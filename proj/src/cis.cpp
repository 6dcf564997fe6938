#include "ashg/cis.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "ashg/io.hpp"

namespace ashg {

namespace {

std::vector<std::size_t> pick_order(std::size_t n, const OrderPolicy& policy) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (policy.kind == OrderPolicy::Kind::seeded) {
    // Fisher-Yates on the raw engine output so the order does not depend on
    // the standard library's distribution implementation.
    std::mt19937_64 rng(policy.seed);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  }
  return order;
}

[[noreturn]] void inconsistent(const std::string& msg) {
  throw Error(ErrorCode::inconsistent_trace, msg);
}

}  // namespace

CisResult compute_cis(const Game& game, OrderPolicy policy) {
  const std::size_t n = game.size();
  if (n == 0) throw Error(ErrorCode::empty_game, "game has no players");

  std::vector<bool> remaining(n, true);
  std::size_t remaining_count = n;
  std::vector<std::vector<PlayerId>> coalitions;
  CisTrace trace;
  const auto order = pick_order(n, policy);
  std::size_t cursor = 0;

  while (remaining_count > 0) {
    while (!remaining[order[cursor]]) ++cursor;
    const PlayerId a(order[cursor]);

    // Best utility a can secure from the remaining players alone.
    Value best;
    std::vector<PlayerId> helpers;
    for (std::size_t b = 0; b < n; ++b)
      if (remaining[b] && game.value(a.index, b) > 0) {
        best += game.value(a.index, b);
        helpers.emplace_back(b);
      }

    std::optional<std::size_t> target;
    for (std::size_t k = 0; k < coalitions.size(); ++k) {
      Value there;
      bool indifferent = true;
      for (PlayerId b : coalitions[k]) {
        there += game.value(a, b);
        if (game.value(b, a) != 0) indifferent = false;
      }
      if (best < there && indifferent) {
        best = there;
        target = k;
      }
    }

    std::size_t z;
    if (target) {
      z = *target;
      coalitions[z].push_back(a);
      remaining[a.index] = false;
      --remaining_count;
      trace.steps.emplace_back(LatecomerJoined{a, z + 1});
    } else {
      z = coalitions.size();
      coalitions.push_back({a});
      remaining[a.index] = false;
      --remaining_count;
      trace.steps.emplace_back(LeaderChosen{a, z + 1});
      for (PlayerId h : helpers) {
        coalitions[z].push_back(h);
        remaining[h.index] = false;
        --remaining_count;
      }
      if (!helpers.empty()) trace.steps.emplace_back(HelpersAdded{z + 1, helpers});
    }

    // Needed players: tolerated by every member, liked by at least one.
    std::vector<std::size_t> dislikes(n, 0), likes(n, 0);
    auto count_member = [&](PlayerId i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!remaining[j]) continue;
        const Value& v = game.value(i.index, j);
        if (v < 0) ++dislikes[j];
        else if (v > 0) ++likes[j];
      }
    };
    for (PlayerId i : coalitions[z]) count_member(i);
    for (;;) {
      std::optional<std::size_t> needed;
      for (std::size_t j = 0; j < n && !needed; ++j)
        if (remaining[j] && dislikes[j] == 0 && likes[j] > 0) needed = j;
      if (!needed) break;
      const PlayerId j(*needed);
      coalitions[z].push_back(j);
      remaining[j.index] = false;
      --remaining_count;
      trace.steps.emplace_back(NeededAdded{j, z + 1});
      count_member(j);
    }
  }

  return CisResult{replay_trace(game, trace), std::move(trace)};
}

Partition replay_trace(const Game& game, const CisTrace& trace) {
  const std::size_t n = game.size();
  std::vector<bool> placed(n, false);
  std::vector<std::vector<PlayerId>> coalitions;

  auto place = [&](PlayerId p, std::size_t k) {
    if (p.index >= n) inconsistent("trace references an unknown player");
    if (k == 0 || k > coalitions.size())
      inconsistent("trace references coalition " + std::to_string(k) +
                   " before it exists");
    if (placed[p.index])
      inconsistent("player '" + game.label(p) + "' placed twice");
    placed[p.index] = true;
    coalitions[k - 1].push_back(p);
  };

  for (const CisEvent& ev : trace.steps) {
    std::visit(
        [&](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, LeaderChosen>) {
            if (e.coalition != coalitions.size() + 1)
              inconsistent("leader opens coalition " + std::to_string(e.coalition) +
                           ", expected " + std::to_string(coalitions.size() + 1));
            coalitions.emplace_back();
            place(e.player, e.coalition);
          } else if constexpr (std::is_same_v<E, HelpersAdded>) {
            if (e.coalition != coalitions.size())
              inconsistent("helpers must join the newest coalition");
            for (PlayerId p : e.players) place(p, e.coalition);
          } else {
            place(e.player, e.coalition);
          }
        },
        ev);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!placed[i])
      inconsistent("player '" + game.label(PlayerId(i)) + "' never placed");
  return Partition::from_sets(game, std::move(coalitions));
}

std::string serialize_trace(const Game& game, const CisTrace& trace) {
  std::ostringstream os;
  for (const CisEvent& ev : trace.steps) {
    std::visit(
        [&](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, LeaderChosen>) {
            os << "leader " << game.label(e.player) << ' ' << e.coalition;
          } else if constexpr (std::is_same_v<E, HelpersAdded>) {
            os << "helpers " << e.coalition;
            for (PlayerId p : e.players) os << ' ' << game.label(p);
          } else if constexpr (std::is_same_v<E, NeededAdded>) {
            os << "needed " << game.label(e.player) << ' ' << e.coalition;
          } else {
            os << "latecomer " << game.label(e.player) << ' ' << e.coalition;
          }
          os << '\n';
        },
        ev);
  }
  return os.str();
}

CisTrace parse_trace(const Game& game, std::string_view text) {
  CisTrace trace;
  auto player = [&](std::string_view label) {
    auto id = game.find(label);
    if (!id) inconsistent("trace references unknown player '" + std::string(label) + "'");
    return *id;
  };
  auto number = [&](std::string_view s) {
    std::size_t k = 0;
    if (s.empty()) inconsistent("missing coalition number");
    for (char c : s) {
      if (c < '0' || c > '9') inconsistent("bad coalition number '" + std::string(s) + "'");
      k = k * 10 + static_cast<std::size_t>(c - '0');
    }
    return k;
  };
  for_each_tokenized_line(text, [&](std::size_t line, const auto& tok) {
    const std::string_view kw = tok[0];
    if (kw == "helpers") {
      if (tok.size() < 2) inconsistent("line " + std::to_string(line) + ": malformed helpers");
      HelpersAdded h{number(tok[1]), {}};
      for (std::size_t i = 2; i < tok.size(); ++i) h.players.push_back(player(tok[i]));
      trace.steps.emplace_back(std::move(h));
      return;
    }
    if (tok.size() != 3) inconsistent("line " + std::to_string(line) + ": malformed event");
    const PlayerId p = player(tok[1]);
    const std::size_t k = number(tok[2]);
    if (kw == "leader") trace.steps.emplace_back(LeaderChosen{p, k});
    else if (kw == "needed") trace.steps.emplace_back(NeededAdded{p, k});
    else if (kw == "latecomer") trace.steps.emplace_back(LatecomerJoined{p, k});
    else inconsistent("line " + std::to_string(line) + ": unknown event '" + std::string(kw) + "'");
  });
  return trace;
}

}  // namespace ashg
