#include "bocalc/eps_algebra.hpp"

#include <stdexcept>

#include "bocalc/arith.hpp"

namespace bocalc::grass {

namespace {

bool odd(long x) { return (x % 2) != 0; }

}  // namespace

GWElem switch_sign(Bidegree a, Bidegree b) {
  GWElem s = odd(a.p * b.p) ? GWElem(-1) : GWElem(1);
  return odd(a.q * b.q) ? s.times_eps() : s;
}

EpsAlgebra::EpsAlgebra(std::vector<Generator> gens) : gens_(std::move(gens)) {}

EpsAlgebra::Element EpsAlgebra::scalar(const GWElem& c) const {
  return monomial(Exponents(gens_.size(), 0), c);
}

EpsAlgebra::Element EpsAlgebra::generator(std::size_t i) const {
  if (i >= gens_.size()) throw ParameterError("EpsAlgebra: generator index out of range");
  Exponents e(gens_.size(), 0);
  e[i] = 1;
  return monomial(e, GWElem(1));
}

EpsAlgebra::Element EpsAlgebra::monomial(const Exponents& e, const GWElem& c) const {
  if (e.size() != gens_.size()) throw ParameterError("EpsAlgebra: exponent vector has wrong length");
  for (int x : e)
    if (x < 0) throw ParameterError("EpsAlgebra: negative exponent");
  Element out;
  insert(out, e, c);
  return out;
}

void EpsAlgebra::insert(Element& out, const Exponents& e, const GWElem& c) const {
  auto it = out.terms_.find(e);
  GWElem v = it == out.terms_.end() ? c : it->second + c;
  v = reduce_coefficient(e, v);
  if (v.is_zero()) {
    if (it != out.terms_.end()) out.terms_.erase(it);
  } else if (it == out.terms_.end()) {
    out.terms_.emplace(e, v);
  } else {
    it->second = v;
  }
}

EpsAlgebra::Element EpsAlgebra::add(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [e, c] : b.terms_) insert(out, e, c);
  return out;
}

EpsAlgebra::Element EpsAlgebra::sub(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [e, c] : b.terms_) insert(out, e, -c);
  return out;
}

EpsAlgebra::Element EpsAlgebra::scale(const GWElem& c, const Element& a) const {
  Element out;
  for (const auto& [e, x] : a.terms_) insert(out, e, c * x);
  return out;
}

EpsAlgebra::Element EpsAlgebra::product(const Element& a, const Element& b) const {
  Element out;
  const std::size_t m = gens_.size();
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      // Move each generator of the right factor left past the larger-index
      // generators of the left factor.
      long sign_exp = 0;
      long eps_exp = 0;
      for (std::size_t g = 0; g < m; ++g) {
        if (ea[g] == 0) continue;
        for (std::size_t h = 0; h < g; ++h) {
          if (eb[h] == 0) continue;
          const long mult = static_cast<long>(ea[g]) * eb[h];
          sign_exp += mult * gens_[g].degree.p * gens_[h].degree.p;
          eps_exp += mult * gens_[g].degree.q * gens_[h].degree.q;
        }
      }
      GWElem c = ca * cb;
      if (odd(sign_exp)) c = -c;
      if (odd(eps_exp)) c = c.times_eps();
      Exponents e(m);
      for (std::size_t g = 0; g < m; ++g) e[g] = ea[g] + eb[g];
      insert(out, e, c);
    }
  }
  return out;
}

Bidegree EpsAlgebra::degree(const Exponents& e) const {
  Bidegree d;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    d.p += e[g] * gens_[g].degree.p;
    d.q += e[g] * gens_[g].degree.q;
  }
  return d;
}

std::optional<Bidegree> EpsAlgebra::homogeneous_degree(const Element& a) const {
  std::optional<Bidegree> d;
  for (const auto& [e, c] : a.terms_) {
    const Bidegree de = degree(e);
    if (d && !(*d == de)) return std::nullopt;
    d = de;
  }
  return d ? d : Bidegree{};
}

GWElem EpsAlgebra::reduce_coefficient(const Exponents& e, const GWElem& c) const {
  // Self-switch sign of generator g is (−1)^p ε^q; collect the ideals (1 − σ).
  bool two = false, one_minus_eps = false, one_plus_eps = false;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (e[g] < 2) continue;
    const bool p = odd(gens_[g].degree.p);
    const bool q = odd(gens_[g].degree.q);
    if (p && !q) two = true;             // σ = −1
    if (!p && q) one_minus_eps = true;   // σ = ε
    if (p && q) one_plus_eps = true;     // σ = −ε
  }
  const int count = int(two) + int(one_minus_eps) + int(one_plus_eps);
  if (count == 0) return c;
  if (count >= 2) return c.specialize_eps(1).mod2();
  if (two) return c.mod2();
  if (one_minus_eps) return c.specialize_eps(1);
  return c.specialize_eps(-1);
}

std::string EpsAlgebra::to_string(const Element& a) const {
  if (a.terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : a.terms_) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (e[g] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += gens_[g].name;
      if (e[g] != 1) mono += "^" + std::to_string(e[g]);
    }
    const std::string cs = c.to_string();
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += "(" + cs + ")*" + mono;
  }
  return out;
}

}  // namespace bocalc::grass
