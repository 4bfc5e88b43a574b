#include "bocalc/arith.hpp"

#include <string>

namespace bocalc {

Int parse_int(std::string_view s) {
  Int out;
  std::string str(s);
  if (str.empty() || out.set_str(str, 10) != 0)
    throw PresentationError("not an integer: '" + str + "'");
  return out;
}

Rat parse_rat(std::string_view s) {
  std::string str(s);
  Rat out;
  const auto slash = str.find('/');
  if (slash == std::string::npos) {
    out = Rat(parse_int(str));
  } else {
    const Int num = parse_int(std::string_view(str).substr(0, slash));
    const Int den = parse_int(std::string_view(str).substr(slash + 1));
    if (is_zero(den)) throw PresentationError("zero denominator: '" + str + "'");
    out = Rat(num, den);
    out.canonicalize();
  }
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace bocalc
