#include "rank2km/types.hpp"

#include <cctype>

namespace rank2km {

Integer exact_div(const Integer& num, const Integer& den, const char* context) {
  ensure(sgn(den) != 0, std::string(context) + ": division by zero");
  ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0,
         std::string(context) + ": non-integral quotient " + to_string(num) +
             "/" + to_string(den));
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& n) {
  if (sgn(d) == 0) return sgn(n) == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) { return v.get_str(10); }

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) fail(ErrorCode::Parse, "malformed integer '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      fail(ErrorCode::Parse, "malformed integer '" + text + "'");
  }
  Integer v;
  // mpz_set_str rejects a leading '+'.
  const std::string digits = text[0] == '+' ? text.substr(1) : text;
  if (v.set_str(digits, 10) != 0)
    fail(ErrorCode::Parse, "malformed integer '" + text + "'");
  return v;
}

}  // namespace rank2km
