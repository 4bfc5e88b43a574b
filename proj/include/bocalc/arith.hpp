#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bocalc {

using Int = mpz_class;
using Rat = mpq_class;

// Raised for out-of-contract arguments (bad ranks, non-embeddable rings, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a presentation or input document is malformed.
class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline std::string coeff_str(const Int& x) { return x.get_str(); }
inline std::string coeff_str(const Rat& x) { return x.get_str(); }

// a / b where b is known to divide a exactly.
inline Int exact_quotient(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rat exact_quotient(const Rat& a, const Rat& b) { return Rat(a / b); }

inline bool divides(const Int& b, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}
inline bool divides(const Rat& b, const Rat&) { return !is_zero(b); }

Int parse_int(std::string_view s);
// Accepts "a", "-a", "a/b".
Rat parse_rat(std::string_view s);

Int binomial(long n, long k);

}  // namespace bocalc
