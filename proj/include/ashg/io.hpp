#pragma once

#include <string>
#include <string_view>

#include "ashg/game.hpp"

namespace ashg {

// Game files:
//   players <label> <label> ...
//   default <rational>            (optional)
//   val <from> <to> <rational>    (zero or more)
// '#' starts a comment. Partition files hold one coalition per line.

Game parse_game(std::string_view text);
/// Canonical form: players in index order, an optional `default` line, then
/// `val` lines for every entry that differs from the default, sorted by
/// (from, to). Deterministic byte-for-byte.
std::string serialize_game(const Game& game);

Partition parse_partition(const Game& game, std::string_view text);
std::string serialize_partition(const Game& game, const Partition& partition);
std::string format_coalition(const Game& game, const Coalition& coalition);

/// Whole file as a string; throws Error(parse) if unreadable.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

/// Splits `line` on whitespace after dropping any '#' comment.
std::vector<std::string_view> tokenize_line(std::string_view line);
/// Applies `fn(line_number, tokens)` to each non-blank line.
template <typename Fn>
void for_each_tokenized_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    auto tokens = tokenize_line(line);
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

}  // namespace ashg
