#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrcoh {

// mpq_class keeps values canonical (reduced, positive denominator) as long
// as every constructor from raw parts is followed by canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// Input rejected by validation (malformed data, violated preconditions).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold exactly did not.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p", "-p" or "p/q". Throws ValidationError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace arrcoh
