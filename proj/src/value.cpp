#include "ashg/value.hpp"

#include <cctype>

#include "ashg/error.hpp"

namespace ashg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::unknown_player: return "UnknownPlayer";
    case ErrorCode::player_not_in_coalition: return "PlayerNotInCoalition";
    case ErrorCode::duplicate_player: return "DuplicatePlayer";
    case ErrorCode::missing_player: return "MissingPlayer";
    case ErrorCode::empty_coalition: return "EmptyCoalition";
    case ErrorCode::invalid_partition: return "InvalidPartition";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::empty_game: return "EmptyGame";
    case ErrorCode::inconsistent_trace: return "InconsistentTrace";
    case ErrorCode::invalid_instance: return "InvalidInstance";
    case ErrorCode::not_a_cover: return "NotACover";
    case ErrorCode::not_an_equal_split: return "NotAnEqualSplit";
  }
  return "Unknown";
}

Value parse_value(std::string_view text) {
  const std::string original(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::parse, "malformed rational '" + original + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorCode::parse, "zero denominator in '" + original + "'");
  if (negative) n = -n;
  Value v(n, d);
  v.canonicalize();
  return v;
}

std::string to_string(const Value& v) { return v.get_str(); }

}  // namespace ashg
