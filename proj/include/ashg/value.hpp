#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ashg {

/// Exact rational valuation. Always kept in canonical form (lowest terms,
/// positive denominator).
using Value = mpq_class;

/// Parses `p` or `p/q` with an optional leading sign and q > 0.
/// Throws Error(ErrorCode::parse) on anything else.
Value parse_value(std::string_view text);

std::string to_string(const Value& v);

}  // namespace ashg
