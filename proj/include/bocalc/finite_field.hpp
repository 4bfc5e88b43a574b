#pragma once

#include <string>
#include <vector>

namespace bocalc {

// F_q for q = p^k, p an odd prime. Elements are encoded as integers in
// [0, q) whose base-p digits are the coefficients of a polynomial in the
// primitive element a, lowest degree first.
class FiniteField {
 public:
  using Elem = int;

  explicit FiniteField(long q);

  long q() const { return q_; }
  long p() const { return p_; }
  int degree() const { return k_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem generator() const { return exp_[1]; }
  Elem from_int(long n) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long e) const;

  // Discrete logarithm to the base of the primitive element; a ≠ 0.
  long log(Elem a) const;
  bool is_square(Elem a) const { return a == 0 || log(a) % 2 == 0; }

  // Coefficients of the minimal polynomial of a, lowest degree first, monic.
  const std::vector<int>& modulus() const { return modulus_; }
  std::vector<Elem> elements() const;

  std::string to_string(Elem a) const;
  Elem parse(const std::string& s) const;

 private:
  std::vector<int> digits(Elem a) const;
  Elem from_digits(const std::vector<int>& d) const;

  long q_ = 0;
  long p_ = 0;
  int k_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;
  std::vector<long> log_;
};

}  // namespace bocalc
