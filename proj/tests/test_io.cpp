#include <doctest.h>

#include "ashg/gadgets.hpp"
#include "ashg/io.hpp"
#include "support.hpp"

using namespace ashg;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ashg::Error");
  return ErrorCode::parse;
}

}  // namespace

TEST_CASE("parse a game with comments, default and fractions") {
  const Game g = parse_game(R"(# three players
players a b c   # declaration order fixes indices
default -1
val a b 1/2
val b a 3
val c a 0
)");
  REQUIRE(g.size() == 3);
  CHECK(g.label(PlayerId(2)) == "c");
  CHECK(g.value(0, 1) == Value(1, 2));
  CHECK(g.value(1, 0) == 3);
  CHECK(g.value(2, 0) == 0);
  CHECK(g.value(0, 2) == -1);
  CHECK(g.value(1, 1) == 0);
}

TEST_CASE("game parse errors") {
  CHECK(code_of([] { parse_game(""); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("players\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("val a b 1\nplayers a b\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("players a b\nval a b 1/0\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("players a b\nval a b 1\nval a b 2\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("players a b\nval a a 1\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("players a b\nval a c 1\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("players a a\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("players a b\ndefault 1\ndefault 2\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_game("players a b\nweight a b 1\n"); }) == ErrorCode::parse);
  CHECK_NOTHROW(parse_game("players a b\nval a a 0\n"));
}

TEST_CASE("canonical serialization of the six-player game") {
  const std::string text = serialize_game(gadgets::example_six_player());
  CHECK(text.starts_with("players 1 2 3 4 5 6\ndefault -33\nval 1 2 6\nval 1 3 4\n"));
  std::size_t vals = 0, pos = 0;
  while ((pos = text.find("\nval ", pos)) != std::string::npos) ++vals, ++pos;
  CHECK(vals == 18);
}

TEST_CASE("partition files") {
  const Game g = gadgets::example_six_player();
  const Partition p = parse_partition(g, "1 2\n\n3 4 5   # middle\n6\n");
  CHECK(serialize_partition(g, p) == "1 2\n3 4 5\n6\n");
  CHECK(serialize_partition(g, parse_partition(g, "6\n5 4 3\n2 1\n")) == "1 2\n3 4 5\n6\n");
  CHECK(code_of([&] { parse_partition(g, "1 2\n3 4 5\n"); }) == ErrorCode::missing_player);
  CHECK(code_of([&] { parse_partition(g, "1 2\n2 3 4 5 6\n"); }) == ErrorCode::duplicate_player);
  CHECK(code_of([&] { parse_partition(g, "1 2 7\n3 4 5 6\n"); }) == ErrorCode::unknown_player);
}

TEST_CASE("round trip: parse(serialize(game)) == game") {
  std::mt19937_64 rng(3);
  std::vector<Game> games{gadgets::example_six_player(),
                          gadgets::reduce_partition({{1, 1, 2}}).gadget.game,
                          gadgets::reduce_partition({{3}}).gadget.game};
  gadgets::E3cInstance e3c{{"1", "2", "3"}, {{0, 1, 2}}};
  games.push_back(gadgets::reduce_e3c(e3c).game);
  for (int i = 0; i < 50; ++i) {
    GameBuilder b({"a", "b", "c", "d"});
    std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
    b.set_default(Value(num(rng), den(rng)));
    for (int k = 0; k < 5; ++k) {
      const auto from = rng() % 4, to = rng() % 4;
      if (from != to) b.set(PlayerId(from), PlayerId(to), Value(num(rng), den(rng)));
    }
    games.push_back(b.build());
  }
  for (const Game& g : games) {
    const std::string text = serialize_game(g);
    const Game back = parse_game(text);
    CHECK(back == g);
    CHECK(serialize_game(back) == text);

    const Partition p = test::random_partition(rng, g.size());
    CHECK(parse_partition(g, serialize_partition(g, p)) == p);
  }
}
