#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/classcalc.hpp"
#include "bocalc/grassring.hpp"
#include "bocalc/polynomial.hpp"
#include "bocalc/symfun.hpp"

namespace bocalc::pontryagin {

// Sign convention of the Pontryagin class through the Thom class; recorded,
// not computed.
inline const std::string kEulerSignConvention = "p(E,φ) = −z*thom(E,φ)";

// Free A-module on 1, t, ..., t^{n-1} with t^n = p_1 t^{n-1} − p_2 t^{n-2} + ... − (−1)^n p_n.
// An element is its coordinate vector (index = power of t).
template <class C>
class QPBModule {
 public:
  using Elem = std::vector<Polynomial<C>>;

  // p holds p_1..p_n as elements of A.
  explicit QPBModule(std::vector<Polynomial<C>> p) : p_(std::move(p)) {
    if (p_.empty()) throw ParameterError("QPBModule needs n ≥ 1");
    for (const auto& x : p_) nvars_ = std::max(nvars_, x.nvars());
  }
  // A = C[p_1..p_n] with the p_i as variables.
  static QPBModule generic(int n) {
    if (n < 1) throw ParameterError("QPBModule needs n ≥ 1");
    std::vector<Polynomial<C>> p;
    for (int i = 0; i < n; ++i) p.push_back(Polynomial<C>::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
    return QPBModule(std::move(p));
  }

  int n() const { return static_cast<int>(p_.size()); }
  const std::vector<Polynomial<C>>& classes() const { return p_; }
  // p_k with p_0 = 1 and p_k = 0 outside 0..n.
  Polynomial<C> p(int k) const {
    if (k == 0) return Polynomial<C>(C(1), nvars_);
    if (k < 0 || k > n()) return Polynomial<C>(nvars_);
    return p_[static_cast<std::size_t>(k - 1)];
  }

  // Coordinates of Σ c_k t^k for arbitrary length input.
  Elem reduce(Elem x) const {
    const auto nn = static_cast<std::size_t>(n());
    for (std::size_t d = x.size(); d-- > nn;) {
      const Polynomial<C> c = x[d];
      if (c.is_zero()) continue;
      for (int k = 1; k <= n(); ++k) {
        const Polynomial<C> term = c * p(k);
        if (k % 2 == 1) x[d - static_cast<std::size_t>(k)] += term;
        else x[d - static_cast<std::size_t>(k)] -= term;
      }
    }
    x.resize(nn, Polynomial<C>(nvars_));
    return x;
  }

  Elem char_reduce(long power) const {
    if (power < 0) throw ParameterError("power must be nonnegative");
    Elem x(static_cast<std::size_t>(std::max<long>(power + 1, n())), Polynomial<C>(nvars_));
    x[static_cast<std::size_t>(power)] = Polynomial<C>(C(1), nvars_);
    return reduce(std::move(x));
  }

  Elem multiply(const Elem& a, const Elem& b) const {
    Elem x(a.size() + b.size(), Polynomial<C>(nvars_));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) x[i + j] += a[i] * b[j];
    return reduce(std::move(x));
  }

 private:
  std::vector<Polynomial<C>> p_;
  std::size_t nvars_ = 0;
};

// A symplectic bundle given by its Pontryagin classes p_1..p_r in a
// polynomial ring, optionally with rank-2 roots t_1..t_r (p_i = e_i(t)).
class FormalSymplecticBundle {
 public:
  static FormalSymplecticBundle split(std::vector<IntPoly> roots);
  static FormalSymplecticBundle abstract(int r, std::vector<IntPoly> p);

  int rank() const { return 2 * r_; }
  int r() const { return r_; }
  bool is_split() const { return split_; }
  const std::vector<IntPoly>& roots() const { return roots_; }
  // p_0 = 1, p_k = 0 for k < 0 or k > r.
  IntPoly p(int k) const;
  std::vector<IntPoly> classes() const;  // p_1..p_r

  nlohmann::json to_json(const std::vector<std::string>& names = {}) const;

 private:
  int r_ = 0;
  bool split_ = false;
  std::vector<IntPoly> roots_;
  std::vector<IntPoly> p_;
  std::size_t nvars_ = 0;
};

// p_k(E⊕F) = Σ_{i+j=k} p_i(E) p_j(F). Roots concatenate when both are split.
FormalSymplecticBundle cartan_sum(const FormalSymplecticBundle& e, const FormalSymplecticBundle& f);

// [F,ψ] − r[H] for a class of rank 2r, read in degree (4,2) through
// [X,φ] ↦ −[(X,φ)[1]].
struct P1Class {
  classcalc::FormalClass value;
  std::pair<int, int> bidegree{4, 2};
  std::string isomorphism = "[X,φ] ↦ −[(X,φ)[1]]";
  nlohmann::json to_json() const;
};
P1Class p1_of_class(long rank, const classcalc::FormalClass& xi);

// (p_1 + i·h)·β^k in present(n,2n) over GWBase, h = 1 + ε.
grass::SchurVector<GWElem> tau_element(int k, int i, int n);

// p_1(U_{n,2n}) + i[H] and the expected [U_{n,2n}] + (i−n)[H].
struct TauClassCheck {
  classcalc::FormalClass computed;
  classcalc::FormalClass expected;
  bool holds = false;
  nlohmann::json to_json() const;
};
TauClassCheck tau_class_check(int n, int i);

}  // namespace bocalc::pontryagin
