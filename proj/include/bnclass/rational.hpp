#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bnclass {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q" (whitespace not allowed). Throws bnclass::Error
/// with ErrorCode::InvalidInput on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonicalized num/den; gmpxx arithmetic requires canonical operands.
inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace bnclass
