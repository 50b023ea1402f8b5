#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bihom {

// Canonical arbitrary-precision rationals. Every value produced by arithmetic
// is kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Dense coordinate vector over a fixed basis.
using Vector = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading sign). The result is canonicalized,
/// so "4/6" reads as 2/3. Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);

Vector unit_vector(std::size_t n, std::size_t i);

/// y += c * x
void axpy(Vector& y, const Rational& c, const Vector& x);

Vector scaled(const Vector& x, const Rational& c);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);

}  // namespace bihom
