#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ashg {

enum class ErrorCode {
  parse,
  unknown_player,
  player_not_in_coalition,
  duplicate_player,
  missing_player,
  empty_coalition,
  invalid_partition,
  too_large,
  empty_game,
  inconsistent_trace,
  invalid_instance,
  not_a_cover,
  not_an_equal_split,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ashg
