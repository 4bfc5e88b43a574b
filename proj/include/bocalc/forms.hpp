#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/abelian.hpp"
#include "bocalc/arith.hpp"
#include "bocalc/finite_field.hpp"
#include "bocalc/matrix.hpp"
#include "bocalc/polynomial.hpp"

namespace bocalc::forms {

// ---------------------------------------------------------------- fields

// Squarefree integer representing the class of a nonzero rational.
Int squarefree_class(const Rat& a);
// Exact rational square root, if one exists.
std::optional<Rat> rational_sqrt(const Rat& a);

struct RationalField {
  using Elem = Rat;
  static constexpr bool ordered = true;
  static constexpr bool complete_invariants = false;
  std::string name() const { return "Q"; }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long n) const { return Rat(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }
  Elem square_class(const Elem& a) const { return Rat(squarefree_class(a)); }
  std::optional<Elem> sqrt(const Elem& a) const { return rational_sqrt(a); }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const { return parse_rat(s); }
};

// A real closed field seen through rational entries: the square class of a
// nonzero element is its sign. Rescaling to ±1 happens only when the needed
// square root is rational; the class is reported either way.
struct RealClosedField {
  using Elem = Rat;
  static constexpr bool ordered = true;
  static constexpr bool complete_invariants = true;
  std::string name() const { return "R"; }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long n) const { return Rat(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }
  Elem square_class(const Elem& a) const { return Rat(sgn(a)); }
  std::optional<Elem> sqrt(const Elem& a) const { return rational_sqrt(a); }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const { return parse_rat(s); }
};

struct FiniteFieldOps {
  using Elem = FiniteField::Elem;
  static constexpr bool ordered = false;
  static constexpr bool complete_invariants = true;
  explicit FiniteFieldOps(long q) : field(std::make_shared<FiniteField>(q)) {}
  std::shared_ptr<const FiniteField> field;

  std::string name() const { return "F_" + std::to_string(field->q()); }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long n) const { return field->from_int(n); }
  Elem add(Elem a, Elem b) const { return field->add(a, b); }
  Elem sub(Elem a, Elem b) const { return field->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return field->mul(a, b); }
  Elem div(Elem a, Elem b) const { return field->div(a, b); }
  Elem neg(Elem a) const { return field->neg(a); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_negative(Elem) const { return false; }
  // 1 for squares, the primitive element otherwise.
  Elem square_class(Elem a) const { return field->is_square(a) ? 1 : field->generator(); }
  std::optional<Elem> sqrt(Elem a) const {
    if (a == 0) return Elem(0);
    const long l = field->log(a);
    if (l % 2 != 0) return std::nullopt;
    return field->pow(field->generator(), l / 2);
  }
  std::string to_string(Elem a) const { return field->to_string(a); }
  Elem parse(const std::string& s) const { return field->parse(s); }
};

// ---------------------------------------------------------------- helpers

template <class F>
Matrix<typename F::Elem> zero_matrix(const F& f, std::size_t r, std::size_t c) {
  return Matrix<typename F::Elem>(r, c, f.zero());
}

template <class F>
Matrix<typename F::Elem> identity_matrix(const F& f, std::size_t n) {
  return Matrix<typename F::Elem>::identity(n, f.one(), f.zero());
}

template <class F>
Matrix<typename F::Elem> multiply(const F& f, const Matrix<typename F::Elem>& a, const Matrix<typename F::Elem>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  auto c = zero_matrix(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

// PᵀGP
template <class F>
Matrix<typename F::Elem> congruence(const F& f, const Matrix<typename F::Elem>& p, const Matrix<typename F::Elem>& g) {
  return multiply(f, multiply(f, p.transpose(), g), p);
}

template <class F>
bool same_matrix(const F& f, const Matrix<typename F::Elem>& a, const Matrix<typename F::Elem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(f.sub(a(i, j), b(i, j)))) return false;
  return true;
}

template <class F>
bool is_symmetric(const F& f, const Matrix<typename F::Elem>& g) {
  return g.rows() == g.cols() && same_matrix(f, g, g.transpose());
}

template <class F>
bool is_skew(const F& f, const Matrix<typename F::Elem>& g) {
  if (g.rows() != g.cols()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!f.is_zero(g(i, i))) return false;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!f.is_zero(f.add(g(i, j), g(j, i)))) return false;
  }
  return true;
}

// Rank by Gaussian elimination.
template <class F>
std::size_t matrix_rank(const F& f, Matrix<typename F::Elem> a) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && f.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, rank);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (f.is_zero(a(i, c))) continue;
      const auto m = f.div(a(i, c), a(rank, c));
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(m, a(rank, j)));
    }
    ++rank;
  }
  return rank;
}

template <class F>
typename F::Elem determinant(const F& f, Matrix<typename F::Elem> a) {
  const std::size_t n = a.rows();
  auto det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(a(p, c))) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      a.swap_rows(p, c);
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(a(i, c))) continue;
      const auto m = f.div(a(i, c), a(c, c));
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(m, a(c, j)));
    }
  }
  return det;
}

template <class F>
nlohmann::json matrix_to_json(const F& f, const Matrix<typename F::Elem>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(f.to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

// Square matrix from a JSON array of rows of strings or integers; errors name
// the offending JSON pointer.
template <class F>
Matrix<typename F::Elem> matrix_from_json(const F& f, const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw PresentationError(where + ": expected a nonempty array of rows");
  const std::size_t n = j.size();
  auto m = zero_matrix(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rp = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != n) throw PresentationError(rp + ": expected a row of length " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = j[r][c];
      const std::string cp = rp + "/" + std::to_string(c);
      try {
        if (x.is_number_integer()) m(r, c) = f.from_int(x.get<long>());
        else if (x.is_string()) m(r, c) = f.parse(x.get<std::string>());
        else throw PresentationError("");
      } catch (const std::exception&) {
        throw PresentationError(cp + ": not an element of " + f.name());
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------- diagonalize

template <class E>
struct Diagonalization {
  std::vector<E> diagonal;        // exact entries of PᵀGP
  std::vector<E> classes;         // square-class representative of each entry
  Matrix<E> P;                    // columns are the new basis vectors
  std::size_t radical_dimension = 0;
  bool nondegenerate() const { return radical_dimension == 0; }
};

template <class F>
Diagonalization<typename F::Elem> diagonalize(const F& f, const Matrix<typename F::Elem>& g0) {
  using E = typename F::Elem;
  if (!is_symmetric(f, g0)) throw ParameterError("diagonalize: Gram matrix is not symmetric");
  const std::size_t n = g0.rows();
  Matrix<E> g = g0;
  Matrix<E> p = identity_matrix(f, n);
  // v_j += c v_k, applied to the basis and to the Gram matrix.
  auto add_multiple = [&](std::size_t j, std::size_t k, const E& c) {
    for (std::size_t i = 0; i < n; ++i) p(i, j) = f.add(p(i, j), f.mul(c, p(i, k)));
    for (std::size_t i = 0; i < n; ++i) g(i, j) = f.add(g(i, j), f.mul(c, g(i, k)));
    for (std::size_t i = 0; i < n; ++i) g(j, i) = f.add(g(j, i), f.mul(c, g(k, i)));
  };
  auto swap_basis = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    p.swap_cols(a, b);
    g.swap_cols(a, b);
    g.swap_rows(a, b);
  };
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && f.is_zero(g(piv, piv))) ++piv;
    if (piv == n) {
      // No diagonal pivot: v_i += v_j makes g(i,i) = 2 g(i,j) ≠ 0.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = k; j < n && !found; ++j)
          if (i != j && !f.is_zero(g(i, j))) {
            add_multiple(i, j, f.one());
            piv = i;
            found = true;
          }
      if (!found) break;
    }
    swap_basis(k, piv);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (f.is_zero(g(k, j))) continue;
      add_multiple(j, k, f.neg(f.div(g(k, j), g(k, k))));
    }
  }
  Diagonalization<E> out;
  out.radical_dimension = n - k;
  for (std::size_t i = 0; i < n; ++i) {
    E d = g(i, i);
    if (f.is_zero(d)) {
      out.diagonal.push_back(d);
      out.classes.push_back(d);
      continue;
    }
    const E rep = f.square_class(d);
    if (auto s = f.sqrt(f.div(rep, d))) {
      for (std::size_t r = 0; r < n; ++r) p(r, i) = f.mul(p(r, i), *s);
      d = rep;
    }
    out.diagonal.push_back(d);
    out.classes.push_back(rep);
  }
  if constexpr (F::ordered) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t r = 0;
      while (r < n && f.is_zero(p(r, c))) ++r;
      if (r < n && f.is_negative(p(r, c)))
        for (std::size_t i = 0; i < n; ++i) p(i, c) = f.neg(p(i, c));
    }
  }
  out.P = p;
  return out;
}

// Rank, discriminant class of the nondegenerate part, and signature when the
// field is ordered.
template <class E>
struct FormInvariants {
  std::size_t rank = 0;
  E discriminant_class;
  long positive = 0;
  long negative = 0;
};

template <class F>
FormInvariants<typename F::Elem> form_invariants(const F& f, const Matrix<typename F::Elem>& g) {
  const auto d = diagonalize(f, g);
  FormInvariants<typename F::Elem> inv;
  auto disc = f.one();
  for (const auto& x : d.diagonal) {
    if (f.is_zero(x)) continue;
    ++inv.rank;
    disc = f.mul(disc, x);
    if constexpr (F::ordered) {
      if (f.is_negative(x)) ++inv.negative;
      else ++inv.positive;
    }
  }
  inv.discriminant_class = f.square_class(disc);
  return inv;
}

// Isometry classification where rank, discriminant and signature are complete
// invariants (finite fields, real closed fields).
template <class F>
bool equivalent(const F& f, const Matrix<typename F::Elem>& a, const Matrix<typename F::Elem>& b) {
  static_assert(F::complete_invariants, "isometry classification is not available over this field");
  if (a.rows() != b.rows()) return false;
  const auto ia = form_invariants(f, a);
  const auto ib = form_invariants(f, b);
  if (ia.rank != ib.rank) return false;
  if constexpr (F::ordered) {
    return ia.positive == ib.positive && ia.negative == ib.negative;
  } else {
    return ia.discriminant_class == ib.discriminant_class;
  }
}

// ---------------------------------------------------------------- symplectic

// Standard skew form: blocks [[0,1],[-1,0]] on coordinate pairs (2i, 2i+1).
template <class F>
Matrix<typename F::Elem> standard_symplectic(const F& f, std::size_t n2) {
  auto j = zero_matrix(f, n2, n2);
  for (std::size_t i = 0; i + 1 < n2; i += 2) {
    j(i, i + 1) = f.one();
    j(i + 1, i) = f.neg(f.one());
  }
  return j;
}

// P with PᵀGP the standard symplectic form.
template <class F>
Matrix<typename F::Elem> symplectic_basis(const F& f, const Matrix<typename F::Elem>& g) {
  using E = typename F::Elem;
  if (!is_skew(f, g)) throw ParameterError("symplectic_basis: Gram matrix is not skew");
  const std::size_t n = g.rows();
  if (n % 2 != 0) throw ParameterError("degenerate skew form");
  auto omega = [&](const std::vector<E>& x, const std::vector<E>& y) {
    E s = f.zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!f.is_zero(g(i, j))) s = f.add(s, f.mul(f.mul(x[i], g(i, j)), y[j]));
    return s;
  };
  std::vector<std::vector<E>> rest;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<E> e(n, f.zero());
    e[i] = f.one();
    rest.push_back(e);
  }
  auto p = zero_matrix(f, n, n);
  std::size_t col = 0;
  while (!rest.empty()) {
    const std::vector<E> u = rest.front();
    rest.erase(rest.begin());
    std::size_t partner = rest.size();
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (!f.is_zero(omega(u, rest[k]))) {
        partner = k;
        break;
      }
    if (partner == rest.size()) throw ParameterError("degenerate skew form");
    std::vector<E> w = rest[partner];
    rest.erase(rest.begin() + static_cast<long>(partner));
    const E scale = f.div(f.one(), omega(u, w));
    for (auto& x : w) x = f.mul(x, scale);
    for (auto& z : rest) {
      const E zw = omega(z, w), zu = omega(z, u);
      for (std::size_t i = 0; i < n; ++i) z[i] = f.add(f.sub(z[i], f.mul(zw, u[i])), f.mul(zu, w[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      p(i, col) = u[i];
      p(i, col + 1) = w[i];
    }
    col += 2;
  }
  return p;
}

// ⟨2,−2⟩ and ⟨1,−1⟩ over Q with an explicit congruence P.
struct HyperbolicWitness {
  Matrix<Rat> from, to, P;
  bool ok = false;
};
HyperbolicWitness hyperbolic_relation_witness();

// ---------------------------------------------------------------- Euclidean rings

struct IntegerRing {
  using Elem = Int;
  std::string name() const { return "Z"; }
  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_unit(const Elem& a) const { return abs(a) == 1; }
  Elem inverse(const Elem& a) const;
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;
  Elem normalize(const Elem& a) const { return abs(a); }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

// Z[1/2] inside Q; the Euclidean norm is the absolute value of the odd part.
struct HalfIntegerRing {
  using Elem = Rat;
  std::string name() const { return "Z[1/2]"; }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool contains(const Elem& a) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_unit(const Elem& a) const;
  Elem inverse(const Elem& a) const;
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;
  Elem normalize(const Elem& a) const;
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

// Q[x] in one variable; the Euclidean norm is degree + 1.
struct RationalPolynomialRing {
  using Elem = RatPoly;
  std::string name() const { return "Q[x]"; }
  Elem zero() const { return RatPoly(1); }
  Elem one() const { return RatPoly(Rat(1), 1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_unit(const Elem& a) const { return !a.is_zero() && a.degree() == 0; }
  Elem inverse(const Elem& a) const;
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;
  Elem normalize(const Elem& a) const;
  std::string to_string(const Elem& a) const { return a.to_string({"x"}); }
};

// ---------------------------------------------------------------- ESp reduction

enum class SpGenerator { Upper, Lower, CrossLower, CrossUpper, Shear };
std::string to_string(SpGenerator g);

// Elementary symplectic generators on pairs (a_i, b_i) = coordinates (2i, 2i+1):
//   Upper(i,c)        a_i += c b_i
//   Lower(i,c)        b_i += c a_i
//   CrossLower(i,j,c) b_i += c a_j, b_j += c a_i
//   CrossUpper(i,j,c) a_i += c b_j, a_j += c b_i
//   Shear(i,j,c)      a_i += c a_j, b_j −= c b_i
template <class E>
struct SpFactor {
  SpGenerator kind;
  std::size_t i = 0, j = 0;
  E c;
  Matrix<E> matrix;
};

template <class R>
Matrix<typename R::Elem> standard_symplectic_ring(const R& r, std::size_t n2) {
  Matrix<typename R::Elem> j(n2, n2, r.zero());
  for (std::size_t i = 0; i + 1 < n2; i += 2) {
    j(i, i + 1) = r.one();
    j(i + 1, i) = r.zero() - r.one();
  }
  return j;
}

template <class R>
SpFactor<typename R::Elem> make_sp_factor(const R& r, std::size_t n, SpGenerator kind, std::size_t i, std::size_t j,
                                          const typename R::Elem& c) {
  using E = typename R::Elem;
  Matrix<E> m = Matrix<E>::identity(2 * n, r.one(), r.zero());
  const std::size_t ai = 2 * i, bi = 2 * i + 1, aj = 2 * j, bj = 2 * j + 1;
  switch (kind) {
    case SpGenerator::Upper: m(ai, bi) = m(ai, bi) + c; break;
    case SpGenerator::Lower: m(bi, ai) = m(bi, ai) + c; break;
    case SpGenerator::CrossLower:
      m(bi, aj) = m(bi, aj) + c;
      m(bj, ai) = m(bj, ai) + c;
      break;
    case SpGenerator::CrossUpper:
      m(ai, bj) = m(ai, bj) + c;
      m(aj, bi) = m(aj, bi) + c;
      break;
    case SpGenerator::Shear:
      m(ai, aj) = m(ai, aj) + c;
      m(bj, bi) = m(bj, bi) - c;
      break;
  }
  const auto jm = standard_symplectic_ring(r, 2 * n);
  if (m.transpose() * jm * m != jm) throw std::logic_error("elementary factor does not preserve J");
  return SpFactor<E>{kind, i, j, c, std::move(m)};
}

class NotUnimodular : public ParameterError {
 public:
  explicit NotUnimodular(std::string gcd)
      : ParameterError("vector is not unimodular: gcd = " + gcd), gcd_(std::move(gcd)) {}
  const std::string& gcd() const { return gcd_; }

 private:
  std::string gcd_;
};

template <class E>
struct SpReduction {
  std::vector<E> input;
  std::vector<SpFactor<E>> factors;  // applied first to last
};

// Factor list E_1..E_k with E_k···E_1 v = e_1, checked on exit.
template <class R>
SpReduction<typename R::Elem> sp_reduce_unimodular(const R& r, const std::vector<typename R::Elem>& v0) {
  using E = typename R::Elem;
  if (v0.empty() || v0.size() % 2 != 0) throw ParameterError("sp_reduce_unimodular: length must be 2n with n ≥ 1");
  const std::size_t n = v0.size() / 2;
  SpReduction<E> out;
  out.input = v0;
  std::vector<E> v = v0;
  auto push = [&](SpGenerator k, std::size_t i, std::size_t j, const E& c) {
    if (r.is_zero(c)) return;
    auto f = make_sp_factor(r, n, k, i, j, c);
    v = f.matrix.apply(v);
    out.factors.push_back(std::move(f));
  };
  auto a = [&](std::size_t i) -> const E& { return v[2 * i]; };
  auto b = [&](std::size_t i) -> const E& { return v[2 * i + 1]; };
  // Euclid inside pair i until b_i = 0.
  auto euclid = [&](std::size_t i) {
    while (!r.is_zero(b(i))) {
      if (r.is_zero(a(i))) {
        push(SpGenerator::Upper, i, i, r.one());
        continue;
      }
      push(SpGenerator::Lower, i, i, r.zero() - r.divmod(b(i), a(i)).first);
      if (r.is_zero(b(i))) break;
      push(SpGenerator::Upper, i, i, r.zero() - r.divmod(a(i), b(i)).first);
    }
  };
  for (std::size_t i = 0; i < n; ++i) euclid(i);
  for (std::size_t i = 1; i < n; ++i) {
    if (r.is_zero(a(i))) continue;
    push(SpGenerator::CrossLower, 0, i, r.one());
    euclid(0);
  }
  if (!r.is_unit(a(0))) throw NotUnimodular(r.to_string(r.normalize(a(0))));
  const E u = a(0);
  const E uinv = r.inverse(u);
  for (std::size_t i = 1; i < n; ++i) {
    if (!r.is_zero(a(i))) push(SpGenerator::Shear, i, 0, r.zero() - a(i) * uinv);
    if (!r.is_zero(b(i))) push(SpGenerator::CrossLower, 0, i, r.zero() - b(i) * uinv);
  }
  if (!r.is_zero(b(0))) push(SpGenerator::Lower, 0, 0, r.zero() - b(0) * uinv);
  if (!(u == r.one())) {
    push(SpGenerator::Lower, 0, 0, uinv);
    push(SpGenerator::Upper, 0, 0, r.one() - u);
    push(SpGenerator::Lower, 0, 0, r.zero() - r.one());
  }
  // Self-check: the product maps the input to e_1.
  std::vector<E> w = v0;
  for (const auto& f : out.factors) w = f.matrix.apply(w);
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!(k == 0 ? w[k] == r.one() : r.is_zero(w[k])))
      throw std::logic_error("sp_reduce_unimodular: product does not reach e_1");
  return out;
}

template <class R>
nlohmann::json sp_reduction_to_json(const R& r, const SpReduction<typename R::Elem>& red) {
  nlohmann::json in = nlohmann::json::array();
  for (const auto& x : red.input) in.push_back(r.to_string(x));
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : red.factors) {
    nlohmann::json m = nlohmann::json::array();
    for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < f.matrix.cols(); ++j) row.push_back(r.to_string(f.matrix(i, j)));
      m.push_back(row);
    }
    fs.push_back({{"kind", to_string(f.kind)}, {"i", f.i}, {"j", f.j}, {"c", r.to_string(f.c)}, {"matrix", m}});
  }
  return {{"ring", r.name()}, {"input", in}, {"factors", fs}, {"reaches_e1", true}};
}

// ---------------------------------------------------------------- unit square classes, KO_1

enum class EuclideanKind { Integers, IntegersTwoInverted, FiniteField, RationalPolynomials, FiniteFieldPolynomials };

struct EuclideanDescriptor {
  EuclideanKind kind = EuclideanKind::Integers;
  long q = 0;  // field size for the finite-field kinds
  std::string name() const;
  bool two_invertible() const { return kind != EuclideanKind::Integers; }
  // "Z", "Z[1/2]", "F_q", "Q[x]", "F_q[x]"
  static EuclideanDescriptor parse(const std::string& s);
};

// R^× as a finitely generated abelian group, when it is one.
struct UnitGroup {
  bool finitely_generated = true;
  std::vector<std::string> generators;
  std::vector<Int> orders;  // 0 = infinite cyclic
  std::string note;
};
UnitGroup unit_group(const EuclideanDescriptor& r);

struct SquareClasses {
  bool finite = false;
  abelian::FGAbelian group;  // R^×/R^×2 when finitely generated
  std::vector<std::string> representatives;
  std::string note;
  std::optional<Int> order() const;
  nlohmann::json to_json() const;
};
SquareClasses unit_square_classes(const EuclideanDescriptor& r);

struct IsometryWitness {
  std::string label;
  std::vector<std::vector<std::string>> matrix;
  std::string determinant;
  bool preserves_form = false;
};

struct KO1Result {
  EuclideanDescriptor ring;
  SquareClasses square_classes;
  bool finite = false;
  abelian::FGAbelian group;  // Z/2 ⊕ R^×/R^×2
  std::vector<IsometryWitness> witnesses;
  std::optional<Int> order() const;
  nlohmann::json to_json() const;
};
KO1Result ko1_euclidean(const EuclideanDescriptor& r);

// ---------------------------------------------------------------- Karoubi bookkeeping

struct NamedCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct KaroubiReport {
  std::vector<NamedCheck> checks;
  std::optional<abelian::FGAbelian> square_classes;  // coker(K1 → V → K1)
  std::optional<abelian::FGAbelian> ko1;
  bool pass() const;
  std::optional<std::string> first_violation() const;
  nlohmann::json to_json() const;
};

// Table layout:
//   {"ring": "Z[1/2]",
//    "groups": {"K0","K1","GW+","GW-","V","W2","W3", optional "KO1"}: cyclic orders, 0 = Z,
//    "maps": {"forgetful": GW-→K0, "hyperbolic": K0→GW+, "K1_to_V": K1→V, "V_to_K1": V→K1}}
// Malformed tables raise PresentationError with the JSON pointer.
KaroubiReport karoubi_check(const nlohmann::json& table);
// The Z[1/2] instance.
nlohmann::json karoubi_sample_table();

}  // namespace bocalc::forms
