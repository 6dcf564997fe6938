#include "ashg/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace ashg {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::vector<std::string_view> tokenize_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Game parse_game(std::string_view text) {
  std::optional<GameBuilder> builder;
  bool have_default = false;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;

  for_each_tokenized_line(text, [&](std::size_t line, const auto& tok) {
    const std::string_view kw = tok[0];
    if (!builder) {
      if (kw != "players") fail(line, "expected 'players' declaration first");
      if (tok.size() < 2) fail(line, "a game needs at least one player");
      std::vector<std::string> labels(tok.begin() + 1, tok.end());
      try {
        builder.emplace(std::move(labels));
      } catch (const Error& e) {
        fail(line, e.what());
      }
      return;
    }
    try {
      if (kw == "default") {
        if (tok.size() != 2) fail(line, "expected 'default <rational>'");
        if (have_default) fail(line, "duplicate 'default' directive");
        have_default = true;
        builder->set_default(parse_value(tok[1]));
      } else if (kw == "val") {
        if (tok.size() != 4) fail(line, "expected 'val <from> <to> <rational>'");
        const PlayerId from = builder->id(tok[1]);
        const PlayerId to = builder->id(tok[2]);
        if (!seen.emplace(from.index, to.index).second)
          fail(line, "duplicate valuation for " + std::string(tok[1]) + " -> " +
                         std::string(tok[2]));
        builder->set(from, to, parse_value(tok[3]));
      } else if (kw == "players") {
        fail(line, "duplicate 'players' declaration");
      } else {
        fail(line, "unknown directive '" + std::string(kw) + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::parse && std::string_view(e.what()).starts_with("line "))
        throw;
      fail(line, e.what());
    }
  });
  if (!builder) throw Error(ErrorCode::parse, "missing 'players' declaration");
  return builder->build();
}

std::string serialize_game(const Game& game) {
  std::ostringstream os;
  os << "players";
  for (const auto& l : game.labels()) os << ' ' << l;
  os << '\n';
  const Value& def = game.default_value();
  if (def != 0) os << "default " << to_string(def) << '\n';
  const auto n = game.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || game.value(i, j) == def) continue;
      os << "val " << game.labels()[i] << ' ' << game.labels()[j] << ' '
         << to_string(game.value(i, j)) << '\n';
    }
  return os.str();
}

Partition parse_partition(const Game& game, std::string_view text) {
  std::vector<std::vector<PlayerId>> sets;
  for_each_tokenized_line(text, [&](std::size_t line, const auto& tok) {
    std::vector<PlayerId> s;
    for (auto t : tok) {
      auto id = game.find(t);
      if (!id)
        throw Error(ErrorCode::unknown_player, "line " + std::to_string(line) +
                                                   ": unknown player '" +
                                                   std::string(t) + "'");
      s.push_back(*id);
    }
    sets.push_back(std::move(s));
  });
  return Partition::from_sets(game, std::move(sets));
}

std::string format_coalition(const Game& game, const Coalition& coalition) {
  std::string out;
  for (PlayerId p : coalition) {
    if (!out.empty()) out += ' ';
    out += game.label(p);
  }
  return out;
}

std::string serialize_partition(const Game& game, const Partition& partition) {
  require_matching(game, partition);
  std::string out;
  for (const auto& c : partition.coalitions()) {
    out += format_coalition(game, c);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace ashg
