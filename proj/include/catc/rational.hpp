#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace catc {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts `p`, `-p`, `p/q`; returns nullopt on malformed text or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace catc
