#include "ashg/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "ashg/io.hpp"

namespace ashg::gadgets {

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::invalid_instance, msg);
}

struct Edge {
  int a, b, weight;
};

// Hexagon weights among players 1..6.
constexpr Edge kHexagon[] = {
    {1, 2, 6}, {3, 4, 6}, {5, 6, 6},
    {1, 6, 5}, {2, 3, 5}, {4, 5, 5},
    {1, 3, 4}, {3, 5, 4}, {1, 5, 4},
};

const Value kEnemy(-33);

std::string x_label(int j, const std::string& element) {
  return "x" + std::to_string(j) + "_" + element;
}

std::string y_label(std::size_t s) { return "y_" + std::to_string(s); }

}  // namespace

void E3cInstance::validate(bool bounded_occurrence) const {
  if (universe.empty() || universe.size() % 3 != 0)
    invalid("universe size must be a positive multiple of 3, got " +
            std::to_string(universe.size()));
  std::set<std::string_view> labels;
  for (const auto& u : universe)
    if (!labels.insert(u).second) invalid("duplicate element '" + u + "'");
  std::vector<std::size_t> occurrences(universe.size(), 0);
  for (const auto& t : triples) {
    for (auto e : t)
      if (e >= universe.size()) invalid("triple references an unknown element");
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      invalid("triple has repeated elements");
    for (auto e : t) ++occurrences[e];
  }
  if (bounded_occurrence)
    for (std::size_t e = 0; e < universe.size(); ++e)
      if (occurrences[e] > 3)
        invalid("element '" + universe[e] + "' occurs in more than three triples");
}

E3cInstance parse_e3c(std::string_view text) {
  E3cInstance inst;
  bool have_universe = false;
  for_each_tokenized_line(text, [&](std::size_t line, const auto& tok) {
    const auto where = "line " + std::to_string(line) + ": ";
    if (tok[0] == "universe") {
      if (have_universe) throw Error(ErrorCode::parse, where + "duplicate universe");
      have_universe = true;
      inst.universe.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "set") {
      if (!have_universe) throw Error(ErrorCode::parse, where + "set before universe");
      if (tok.size() != 4) throw Error(ErrorCode::parse, where + "a set needs 3 elements");
      std::array<std::size_t, 3> t{};
      for (std::size_t k = 0; k < 3; ++k) {
        auto it = std::find(inst.universe.begin(), inst.universe.end(), tok[k + 1]);
        if (it == inst.universe.end())
          throw Error(ErrorCode::parse,
                      where + "unknown element '" + std::string(tok[k + 1]) + "'");
        t[k] = static_cast<std::size_t>(it - inst.universe.begin());
      }
      std::sort(t.begin(), t.end());
      inst.triples.push_back(t);
    } else {
      throw Error(ErrorCode::parse, where + "unknown directive '" + std::string(tok[0]) + "'");
    }
  });
  if (!have_universe) throw Error(ErrorCode::parse, "missing universe line");
  return inst;
}

std::uint64_t PartitionInstance::total() const {
  std::uint64_t w = 0;
  for (auto a : weights) w += a;
  return w;
}

void PartitionInstance::validate() const {
  for (auto a : weights)
    if (a == 0) invalid("weights must be positive");
}

PartitionInstance parse_weights(std::string_view text) {
  PartitionInstance inst;
  std::size_t i = 0;
  auto separator = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    while (i < text.size() && separator(text[i])) ++i;
    if (i == text.size()) break;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    const auto used = static_cast<std::size_t>(ptr - (text.data() + i));
    if (ec != std::errc() || used == 0 ||
        (i + used < text.size() && !separator(text[i + used])))
      throw Error(ErrorCode::parse, "malformed weight list '" + std::string(text) + "'");
    inst.weights.push_back(v);
    i += used;
  }
  return inst;
}

Game example_six_player() {
  GameBuilder b({"1", "2", "3", "4", "5", "6"});
  b.set_default(kEnemy);
  for (const auto& e : kHexagon)
    b.set_symmetric(PlayerId(e.a - 1), PlayerId(e.b - 1), Value(e.weight));
  return b.build();
}

GadgetGame reduce_e3c(const E3cInstance& instance) {
  instance.validate(false);
  std::vector<std::string> labels;
  for (const auto& r : instance.universe)
    for (int j = 1; j <= 6; ++j) labels.push_back(x_label(j, r));
  for (std::size_t s = 0; s < instance.triples.size(); ++s)
    labels.push_back(y_label(s));

  GameBuilder b(labels);
  b.set_default(kEnemy);
  auto x = [&](int j, std::size_t r) { return PlayerId(r * 6 + static_cast<std::size_t>(j - 1)); };
  for (std::size_t r = 0; r < instance.universe.size(); ++r)
    for (const auto& e : kHexagon) b.set_symmetric(x(e.a, r), x(e.b, r), Value(e.weight));

  const Value half(1, 2);
  const Value bond(41, 4);
  const std::size_t y0 = instance.universe.size() * 6;
  for (std::size_t s = 0; s < instance.triples.size(); ++s) {
    const auto& t = instance.triples[s];
    for (std::size_t p = 0; p < 3; ++p) {
      b.set_symmetric(PlayerId(y0 + s), x(6, t[p]), bond);
      for (std::size_t q = p + 1; q < 3; ++q) b.set_symmetric(x(6, t[p]), x(6, t[q]), half);
    }
  }

  GadgetGame g{b.build(), {}};
  for (std::size_t i = 0; i < labels.size(); ++i) g.labeling.emplace(labels[i], PlayerId(i));
  return g;
}

bool is_exact_cover(const E3cInstance& instance,
                    const std::vector<std::size_t>& cover) {
  std::vector<bool> hit(instance.universe.size(), false);
  std::set<std::size_t> chosen;
  for (auto s : cover) {
    if (s >= instance.triples.size() || !chosen.insert(s).second) return false;
    for (auto e : instance.triples[s]) {
      if (hit[e]) return false;
      hit[e] = true;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

Partition witness_partition_e3c(const E3cInstance& instance,
                                const GadgetGame& gadget,
                                const std::vector<std::size_t>& cover) {
  if (!is_exact_cover(instance, cover))
    throw Error(ErrorCode::not_a_cover, "selected triples are not an exact cover");
  std::vector<std::vector<PlayerId>> sets;
  for (const auto& r : instance.universe) {
    sets.push_back({gadget.role(x_label(1, r)), gadget.role(x_label(2, r))});
    sets.push_back({gadget.role(x_label(3, r)), gadget.role(x_label(4, r)),
                    gadget.role(x_label(5, r))});
  }
  const std::set<std::size_t> used(cover.begin(), cover.end());
  for (std::size_t s = 0; s < instance.triples.size(); ++s) {
    std::vector<PlayerId> c{gadget.role(y_label(s))};
    if (used.count(s))
      for (auto e : instance.triples[s])
        c.push_back(gadget.role(x_label(6, instance.universe[e])));
    sets.push_back(std::move(c));
  }
  return Partition::from_sets(gadget.game, std::move(sets));
}

std::optional<std::vector<std::size_t>> solve_e3c(const E3cInstance& instance,
                                                  std::size_t cap) {
  instance.validate(false);
  const std::size_t m = instance.triples.size();
  if (m > cap)
    throw Error(ErrorCode::too_large, std::to_string(m) + " triples exceed oracle cap " +
                                          std::to_string(cap));
  const std::size_t elements = instance.universe.size();
  std::vector<bool> hit(elements, false);
  std::vector<std::size_t> chosen;
  std::size_t covered = 0;

  // Preorder walk over index subsets: {0}, {0,1}, {0,1,2}, ..., {0,2}, {1}, ...
  // Overlapping choices cannot extend to an exact cover.
  auto walk = [&](auto&& self, std::size_t from) -> bool {
    for (std::size_t s = from; s < m; ++s) {
      const auto& t = instance.triples[s];
      if (hit[t[0]] || hit[t[1]] || hit[t[2]]) continue;
      for (auto e : t) hit[e] = true;
      covered += 3;
      chosen.push_back(s);
      if (covered == elements || self(self, s + 1)) return true;
      chosen.pop_back();
      covered -= 3;
      for (auto e : t) hit[e] = false;
    }
    return false;
  };
  if (walk(walk, 0)) return chosen;
  return std::nullopt;
}

PartitionGadget reduce_partition(const PartitionInstance& instance) {
  instance.validate();
  const std::size_t k = instance.weights.size();
  std::vector<std::string> labels{"x1", "x2", "y1", "y2"};
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("z" + std::to_string(i));

  const Value w(mpz_class(std::to_string(instance.total())));
  const Value half_w = w / 2;
  const PlayerId x1(0), x2(1), y1(2), y2(3);

  GameBuilder b(labels);
  for (PlayerId x : {x1, x2}) {
    b.set(x, y1, half_w);
    b.set(x, y2, half_w);
    for (std::size_t i = 0; i < k; ++i)
      b.set(x, PlayerId(4 + i), Value(mpz_class(std::to_string(instance.weights[i]))));
  }
  b.set_symmetric(x1, x2, -w);
  b.set_symmetric(y1, y2, -w);

  PartitionGadget out{GadgetGame{b.build(), {}}, Partition::grand(labels.size())};
  for (std::size_t i = 0; i < labels.size(); ++i)
    out.gadget.labeling.emplace(labels[i], PlayerId(i));
  return out;
}

Partition witness_partition_split(const PartitionInstance& instance,
                                  const GadgetGame& gadget,
                                  const std::vector<std::size_t>& side) {
  const std::size_t k = instance.weights.size();
  std::vector<bool> in_side(k, false);
  std::uint64_t sum = 0;
  for (auto i : side) {
    if (i >= k || in_side[i])
      throw Error(ErrorCode::not_an_equal_split, "bad weight index in split");
    in_side[i] = true;
    sum += instance.weights[i];
  }
  if (2 * sum != instance.total())
    throw Error(ErrorCode::not_an_equal_split,
                "side sums to " + std::to_string(sum) + ", need half of " +
                    std::to_string(instance.total()));
  std::vector<PlayerId> left{gadget.role("x1"), gadget.role("y1")};
  std::vector<PlayerId> right{gadget.role("x2"), gadget.role("y2")};
  for (std::size_t i = 0; i < k; ++i)
    (in_side[i] ? left : right).push_back(gadget.role("z" + std::to_string(i + 1)));
  return Partition::from_sets(gadget.game, {std::move(left), std::move(right)});
}

std::optional<std::vector<std::size_t>> solve_partition(
    const PartitionInstance& instance, std::size_t cap) {
  const std::size_t k = instance.weights.size();
  if (k > cap)
    throw Error(ErrorCode::too_large, std::to_string(k) + " weights exceed oracle cap " +
                                          std::to_string(cap));
  const std::uint64_t total = instance.total();
  if (total % 2 != 0) return std::nullopt;
  const std::uint64_t end = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) sum += instance.weights[i];
    if (2 * sum == total) {
      std::vector<std::size_t> side;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) side.push_back(i);
      return side;
    }
  }
  return std::nullopt;
}

}  // namespace ashg::gadgets
