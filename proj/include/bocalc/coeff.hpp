#pragma once

#include <string>
#include <type_traits>

#include "bocalc/arith.hpp"
#include "bocalc/gw_coeff.hpp"
#include "bocalc/polynomial.hpp"

namespace bocalc {

enum class CoeffRing { Integers, Rationals, GWBase };

std::string to_string(CoeffRing c);
CoeffRing coeff_ring_from_string(const std::string& s);

// The image of an integer in a coefficient ring.
template <class C>
C coeff_from_int(const Int& x) {
  if constexpr (std::is_same_v<C, GWElem>) return GWElem(x, Int(0));
  else return C(x);
}

template <class C>
Polynomial<C> change_coeffs(const IntPoly& p) {
  Polynomial<C> out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, coeff_from_int<C>(c));
  return out;
}

}  // namespace bocalc
