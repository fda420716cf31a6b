#pragma once

// Exact scalar types and the error type shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rank2km {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  InvalidArgument,  // caller violated a precondition
  Unsupported,      // input is outside the family an operation is defined for
  Parse,            // malformed text (root specs, integers, JSON)
  Invariant,        // an internal mathematical invariant failed; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::Invariant, what);
}

// Exact quotient; throws Invariant when den does not divide num.
Integer exact_div(const Integer& num, const Integer& den, const char* context);

bool divides(const Integer& d, const Integer& n);  // 0 | n iff n == 0

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

// Parses an optionally signed decimal integer; throws ErrorCode::Parse.
Integer parse_integer(const std::string& text);

}  // namespace rank2km
