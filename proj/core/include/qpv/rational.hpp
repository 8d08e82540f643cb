#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>

namespace qpv {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "n" or "n/d" in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Square root when `q` is the square of a rational, otherwise nullopt.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Factor c such that c * values has coprime integer entries and a positive
/// first nonzero entry. Returns 1 for an all-zero range.
Rational primitive_scale(std::span<const Rational> values);

}  // namespace qpv
