#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bocalc/arith.hpp"

namespace bocalc {

// Exponent vector of a monomial. Negative entries are allowed, which makes
// Polynomial double as a Laurent polynomial when a variable is inverted.
using Exponents = std::vector<int>;

inline long total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0L);
}

// Graded-lexicographic order, largest first: total degree, then the
// exponent of x1, then x2, ...  Every serialized polynomial uses it.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const long da = total_degree(a);
    const long db = total_degree(b);
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const int x = i < a.size() ? a[i] : 0;
      const int y = i < b.size() ? b[i] : 0;
      if (x != y) return x > y;
    }
    return false;
  }
};

namespace detail {
// Free-function hop so member names like Polynomial::is_zero do not hide the
// coefficient overloads.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

// Sparse multivariate polynomial over an exact coefficient ring C.
// Polynomials with different variable counts combine by padding the shorter
// exponent vectors with zeros (new variables are appended on the right).
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using TermMap = std::map<Exponents, C, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  explicit Polynomial(const C& c, std::size_t nvars = 0) : nvars_(nvars) {
    add_term(Exponents(nvars, 0), c);
  }

  static Polynomial variable(std::size_t nvars, std::size_t index, int power = 1) {
    if (index >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
    Exponents e(nvars, 0);
    e[index] = power;
    Polynomial p(nvars);
    p.add_term(e, C(1));
    return p;
  }

  static Polynomial monomial(Exponents e, C c) {
    Polynomial p(e.size());
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int x) { return x == 0; }));
  }

  C constant_term() const { return coeff(Exponents(nvars_, 0)); }

  C coeff(const Exponents& e) const {
    auto it = terms_.find(padded(e, nvars_));
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(Exponents e, const C& c) {
    if (bocalc_is_zero(c)) return;
    if (e.size() > nvars_) widen(e.size());
    e.resize(nvars_, 0);
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (bocalc_is_zero(it->second)) terms_.erase(it);
    }
  }

  // Leading term in grlex order; requires a nonzero polynomial.
  const std::pair<const Exponents, C>& leading() const {
    if (terms_.empty()) throw std::logic_error("Polynomial::leading: zero polynomial");
    return *terms_.begin();
  }

  long degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  long degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, var < e.size() ? e[var] : 0);
    return d;
  }

  // Degree with variable i weighted by weights[i].
  long weighted_degree(const std::vector<int>& weights) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, weight_of(e, weights));
    return d;
  }

  static long weight_of(const Exponents& e, const std::vector<int>& weights) {
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(e[i]) * weights.at(i);
    return w;
  }

  Polynomial homogeneous_part(const std::vector<int>& weights, long w) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (weight_of(e, weights) == w) out.terms_.emplace(e, c);
    return out;
  }

  Polynomial truncated(const std::vector<int>& weights, long max_weight) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (weight_of(e, weights) <= max_weight) out.terms_.emplace(e, c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    align(o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    align(o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const C& s) {
    if (bocalc_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    // Coefficient rings with zero divisors can annihilate terms.
    std::erase_if(terms_, [](const auto& kv) { return bocalc_is_zero(kv.second); });
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.nvars_, b.nvars_);
    Polynomial out(n);
    Exponents e(n, 0);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        out.add_term(e, C(ca * cb));
      }
    }
    return out;
  }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    const std::size_t n = std::max(a.nvars_, b.nvars_);
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (padded(ia->first, n) != padded(ib->first, n)) return false;
      if (!(ia->second == ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const {
    Polynomial result(C(1), nvars_);
    Polynomial base = *this;
    while (k) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return result;
  }

  // Ring map sending variable i to images[i]. Negative exponents are only
  // allowed for monomial images (which are then inverted termwise).
  Polynomial substitute(const std::vector<Polynomial>& images, std::size_t target_nvars) const {
    if (images.size() < nvars_) throw std::invalid_argument("Polynomial::substitute: too few images");
    Polynomial out(target_nvars);
    for (const auto& [e, c] : terms_) {
      Polynomial term(c, target_nvars);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] > 0) {
          term = term * images[i].pow(static_cast<unsigned>(e[i]));
        } else {
          term = term * images[i].monomial_inverse().pow(static_cast<unsigned>(-e[i]));
        }
      }
      out += term;
    }
    return out;
  }

  // Inverse of a monomial with unit coefficient (Laurent inversion).
  Polynomial monomial_inverse() const {
    if (terms_.size() != 1) throw std::domain_error("Polynomial::monomial_inverse: not a monomial");
    const auto& [e, c] = *terms_.begin();
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    return monomial(neg, C(C(1) / c));
  }

  // Reindex into a ring with `new_nvars` variables, variable i landing at i + offset.
  Polynomial embed(std::size_t new_nvars, std::size_t offset) const {
    if (nvars_ + offset > new_nvars) throw std::invalid_argument("Polynomial::embed: does not fit");
    Polynomial out(new_nvars);
    for (const auto& [e, c] : terms_) {
      Exponents f(new_nvars, 0);
      std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  // Evaluate variable `var` at a scalar, keeping the variable count.
  Polynomial evaluate(std::size_t var, const C& value) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      C v = c;
      if (var < f.size()) {
        if (f[var] < 0) throw std::domain_error("Polynomial::evaluate: Laurent exponent");
        for (int k = 0; k < f[var]; ++k) v *= value;
        f[var] = 0;
      }
      out.add_term(f, v);
    }
    return out;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = coeff_str(c);
      const bool unit_mono = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
      bool negative = !cs.empty() && cs[0] == '-' && cs.find_first_of("+ ") == std::string::npos;
      if (negative) cs = cs.substr(1);
      if (!first) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      first = false;
      const bool compound = cs.find_first_of("+- ") != std::string::npos;
      if (!unit_mono) {
        out += compound ? "(" + cs + ")" : cs;
        continue;
      }
      if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
      bool first_var = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first_var) out += "*";
        first_var = false;
        out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  static bool bocalc_is_zero(const C& c) { return detail::coeff_is_zero(c); }

  static Exponents padded(Exponents e, std::size_t n) {
    if (e.size() < n) e.resize(n, 0);
    return e;
  }

  void widen(std::size_t n) {
    if (n <= nvars_) return;
    TermMap widened;
    for (auto& [e, c] : terms_) widened.emplace(padded(e, n), std::move(c));
    terms_ = std::move(widened);
    nvars_ = n;
  }

  void align(std::size_t other) { widen(other); }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

template <class C>
inline std::string coeff_str(const Polynomial<C>& p) {
  return p.to_string();
}
template <class C>
inline bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

// Multivariate division by b using grlex leading terms. Returns the quotient
// when b divides a exactly, std::nullopt otherwise. Exponents must be
// nonnegative.
template <class C>
std::optional<Polynomial<C>> divide_exact(Polynomial<C> a, const Polynomial<C>& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  const std::size_t n = std::max(a.nvars(), b.nvars());
  Polynomial<C> q(n);
  const auto& [lb_e, lb_c] = b.leading();
  while (!a.is_zero()) {
    const auto& [la_e, la_c] = a.leading();
    Exponents diff(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const int x = i < la_e.size() ? la_e[i] : 0;
      const int y = i < lb_e.size() ? lb_e[i] : 0;
      if (x < y) return std::nullopt;
      diff[i] = x - y;
    }
    if (!divides(lb_c, la_c)) return std::nullopt;
    auto t = Polynomial<C>::monomial(diff, exact_quotient(la_c, lb_c));
    q += t;
    a -= t * b;
  }
  return q;
}

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

// Univariate helpers over a field (used by the Euclidean ring Q[x]).
template <class C>
std::pair<Polynomial<C>, Polynomial<C>> divmod_univariate(Polynomial<C> a, const Polynomial<C>& b) {
  if (b.is_zero()) throw std::domain_error("divmod_univariate: division by zero");
  Polynomial<C> q(1);
  const long db = b.degree();
  const C lb = b.leading().second;
  while (!a.is_zero() && a.degree() >= db) {
    const auto& [ea, ca] = a.leading();
    const int shift = (ea.empty() ? 0 : ea[0]) - static_cast<int>(db);
    auto t = Polynomial<C>::monomial(Exponents{shift}, C(ca / lb));
    q += t;
    a -= t * b;
  }
  return {q, a};
}

}  // namespace bocalc
