#pragma once

#include <map>
#include <string>
#include <utility>

#include "bocalc/arith.hpp"

namespace bocalc {

// Element of Z[eps]/(eps^2 - 1)[beta, beta^-1]: the stand-in for the
// coefficient ring of the point. eps is <-1>, h = 1 + eps is the hyperbolic
// class, beta is the bidegree-(8,4) periodicity generator.
class GWElem {
 public:
  struct Part {
    Int one;  // coefficient of 1
    Int eps;  // coefficient of eps
    friend bool operator==(const Part&, const Part&) = default;
  };

  GWElem() = default;
  GWElem(long a) {  // NOLINT(google-explicit-constructor): integers embed
    if (a != 0) parts_[0] = Part{Int(a), Int(0)};
  }
  GWElem(const Int& a, const Int& b, int beta_power = 0) {
    if (!bocalc::is_zero(a) || !bocalc::is_zero(b)) parts_[beta_power] = Part{a, b};
  }

  static GWElem one() { return GWElem(1); }
  static GWElem eps() { return GWElem(Int(0), Int(1)); }
  static GWElem hyperbolic() { return GWElem(Int(1), Int(1)); }
  static GWElem beta(int k = 1) { return GWElem(Int(1), Int(0), k); }

  const std::map<int, Part>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  GWElem& operator+=(const GWElem& o);
  GWElem& operator-=(const GWElem& o);
  GWElem& operator*=(const GWElem& o) { return *this = *this * o; }
  friend GWElem operator+(GWElem a, const GWElem& b) { return a += b; }
  friend GWElem operator-(GWElem a, const GWElem& b) { return a -= b; }
  friend GWElem operator-(const GWElem& a);
  friend GWElem operator*(const GWElem& a, const GWElem& b);
  friend bool operator==(const GWElem& a, const GWElem& b) { return a.parts_ == b.parts_; }

  // Multiplication by eps swaps the two coordinates.
  GWElem times_eps() const;

  // Image under the ring map eps -> s (s = +1 or -1); drops nothing else.
  GWElem specialize_eps(int s) const;

  // Coordinates reduced mod 2 in every beta-degree.
  GWElem mod2() const;

  std::string to_string() const;

 private:
  void normalize();
  std::map<int, Part> parts_;
};

inline bool is_zero(const GWElem& x) { return x.is_zero(); }
inline std::string coeff_str(const GWElem& x) { return x.to_string(); }

}  // namespace bocalc
