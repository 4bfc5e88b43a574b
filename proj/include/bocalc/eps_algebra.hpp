#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bocalc/gw_coeff.hpp"
#include "bocalc/polynomial.hpp"

namespace bocalc::grass {

struct Bidegree {
  long p = 0;
  long q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

// (−1)^{pp'} ε^{qq'} as an element of GWBase.
GWElem switch_sign(Bidegree a, Bidegree b);

// Free ε-commutative algebra over GWBase on generators of given bidegrees.
// Elements are combinations of normal-ordered monomials x_1^{a_1}...x_m^{a_m}.
// A generator whose self-switch sign σ differs from 1 has x² = σx², so the
// coefficient of any monomial containing it squared lives in GWBase/(1 − σ);
// coefficients are kept reduced to canonical representatives there.
class EpsAlgebra {
 public:
  struct Generator {
    std::string name;
    Bidegree degree;
  };

  class Element {
   public:
    const std::map<Exponents, GWElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const Element&, const Element&) = default;

   private:
    friend class EpsAlgebra;
    std::map<Exponents, GWElem> terms_;
  };

  explicit EpsAlgebra(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& generator_info(std::size_t i) const { return gens_.at(i); }

  Element zero() const { return Element(); }
  Element scalar(const GWElem& c) const;
  Element generator(std::size_t i) const;
  Element monomial(const Exponents& e, const GWElem& c) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const GWElem& c, const Element& a) const;
  Element product(const Element& a, const Element& b) const;

  Bidegree degree(const Exponents& e) const;
  // Common bidegree of all terms, if any.
  std::optional<Bidegree> homogeneous_degree(const Element& a) const;

  // Canonical representative of c in the coefficient module of monomial e.
  GWElem reduce_coefficient(const Exponents& e, const GWElem& c) const;

  std::string to_string(const Element& a) const;

 private:
  void insert(Element& out, const Exponents& e, const GWElem& c) const;
  std::vector<Generator> gens_;
};

inline EpsAlgebra::Element eps_product(const EpsAlgebra& alg, const EpsAlgebra::Element& a,
                                       const EpsAlgebra::Element& b) {
  return alg.product(a, b);
}

}  // namespace bocalc::grass
