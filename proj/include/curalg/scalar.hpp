#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace curalg {

/// Exact rational; GMP keeps it canonical (den > 0, gcd 1, zero is 0/1).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

bool is_zero(const Vector& v);

}  // namespace curalg
