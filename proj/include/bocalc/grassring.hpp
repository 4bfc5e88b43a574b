#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/coeff.hpp"
#include "bocalc/symfun.hpp"

namespace bocalc::grass {

using symfun::Partition;
using symfun::SymPoly;

// Coordinates over a Schur basis; absent partitions have coordinate zero.
template <class C>
using SchurVector = std::map<Partition, C>;

// s_λ · e_k by the Pieri rule, keeping only shapes inside rows × cols
// (cols < 0 means no column bound).
std::map<Partition, Int> pieri_elementary(const Partition& lambda, int k, int rows, int cols);

// Schur expansion of the e-monomial with exponent vector e, shapes bounded
// by rows × cols as in pieri_elementary.
std::map<Partition, Int> schur_expand_monomial(const Exponents& e, int rows, int cols);

// Motivic bidegree (4w, 2w) of Pontryagin weight w.
inline std::pair<long, long> bidegree_of_weight(long w) { return {4 * w, 2 * w}; }

// A(pt)[p_1..p_r]/(h_{n-r+1},...,h_n) with p_i written as e_i, Schur basis
// indexed by the partitions in an r × (n-r) box.
class GrassRing {
 public:
  static GrassRing present(int r, int n, CoeffRing coeff = CoeffRing::Integers);

  int r() const { return r_; }
  int n() const { return n_; }
  int cols() const { return n_ - r_; }
  CoeffRing coeff() const { return coeff_; }
  const std::vector<SymPoly>& ideal_generators() const { return ideal_; }
  const std::vector<Partition>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  bool in_box(const Partition& p) const { return p.fits_in_box(r_, cols()); }
  std::optional<std::size_t> index_of(const Partition& p) const;

  // Coordinates of x (a polynomial in e_1..e_r) over the Schur basis.
  // Each e-monomial is expanded by iterated Pieri and shapes leaving the box
  // are discarded, which is reduction modulo the ideal.
  template <class C>
  SchurVector<C> normal_form(const Polynomial<C>& x) const;

  // Σ c_λ s_λ as a polynomial in e_1..e_r.
  template <class C>
  Polynomial<C> lift(const SchurVector<C>& v) const;

  template <class C>
  SchurVector<C> multiply(const SchurVector<C>& a, const SchurVector<C>& b) const {
    return normal_form(lift(a) * lift(b));
  }

  template <class C>
  std::vector<C> coordinates(const SchurVector<C>& v) const;

  nlohmann::json to_json() const;

 private:
  GrassRing(int r, int n, CoeffRing coeff);
  int r_;
  int n_;
  CoeffRing coeff_;
  std::vector<SymPoly> ideal_;
  std::vector<Partition> basis_;
};

enum class RestrictionKind { Alpha, Beta, Composite };
std::string to_string(RestrictionKind k);
RestrictionKind restriction_kind_from_string(const std::string& s);

// Linear map between Schur coordinate spaces, stored sparsely.
struct SchurMap {
  std::pair<int, int> source;
  std::pair<int, int> target;
  std::vector<Partition> source_basis;
  std::vector<Partition> target_basis;
  std::vector<std::tuple<std::size_t, std::size_t, Int>> entries;  // (row, col, value)

  Matrix<Int> dense() const;
  template <class C>
  SchurVector<C> apply(const SchurVector<C>& v) const;
  nlohmann::json to_json() const;
};

// Restriction along α (n ↦ n+1, iterated), β ((r,n) ↦ (r+1,n+1), iterated)
// or any composite of the two. Fixes coordinates of partitions in the target
// box and kills the rest.
SchurMap restriction(const GrassRing& source, const GrassRing& target, RestrictionKind kind);

// The ring map on presentations: e_i ↦ e_i for i ≤ target.r, else 0.
template <class C>
Polynomial<C> restrict_polynomial(const Polynomial<C>& x, const GrassRing& target);

SchurMap compose(const SchurMap& outer, const SchurMap& inner);

// Homogeneous power series in p_1..p_g truncated above weight W.
class PowerSeriesRing {
 public:
  // r = nullopt is the countably generated ring; its generators beyond p_W
  // contribute nothing through weight W and are dropped.
  static PowerSeriesRing limit_ring(std::optional<int> r, int truncation, CoeffRing coeff);

  std::size_t generators() const { return static_cast<std::size_t>(gens_); }
  bool countable() const { return countable_; }
  int truncation() const { return w_; }
  CoeffRing coeff() const { return coeff_; }
  const std::vector<int>& weights() const { return weights_; }

  // Monomials of weight ≤ W, weight ascending, grlex within a weight.
  std::vector<Exponents> basis() const;

  template <class C>
  Polynomial<C> truncate(const Polynomial<C>& x) const {
    Polynomial<C> y = x;
    if (y.nvars() < generators()) y += Polynomial<C>(generators());
    return y.truncated(weights_, w_);
  }
  template <class C>
  Polynomial<C> multiply(const Polynomial<C>& a, const Polynomial<C>& b) const {
    return truncate(truncate(a) * truncate(b));
  }

  // Image in present(r,n): p_i ↦ e_i (zero above the target's r), then normal form.
  template <class C>
  SchurVector<C> project(const Polynomial<C>& x, const GrassRing& target) const;

  // Σ c_λ s_λ(p) truncated at W, for coordinates over target's Schur basis.
  template <class C>
  Polynomial<C> from_schur(const SchurVector<C>& v) const;

  nlohmann::json to_json() const;

 private:
  PowerSeriesRing(int gens, bool countable, int w, CoeffRing coeff);
  int gens_;
  bool countable_;
  int w_;
  CoeffRing coeff_;
  std::vector<int> weights_;
};

template <class C>
nlohmann::json schur_vector_to_json(const SchurVector<C>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, c] : v) out.push_back({{"partition", symfun::to_json(p)}, {"coeff", coeff_str(c)}});
  return out;
}

// ---------------------------------------------------------------------------

template <class C>
SchurVector<C> GrassRing::normal_form(const Polynomial<C>& x) const {
  SchurVector<C> out;
  std::map<Exponents, std::map<Partition, Int>> cache;
  for (const auto& [e, c] : x.terms()) {
    for (std::size_t i = static_cast<std::size_t>(r_); i < e.size(); ++i)
      if (e[i] != 0) throw ParameterError("normal_form: polynomial uses e_i with i > r");
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, schur_expand_monomial(e, r_, cols())).first;
    for (const auto& [lambda, k] : it->second) {
      C add = c * coeff_from_int<C>(k);
      auto [pos, inserted] = out.try_emplace(lambda, add);
      if (!inserted) pos->second += add;
      if (detail::coeff_is_zero(pos->second)) out.erase(pos);
    }
  }
  return out;
}

template <class C>
Polynomial<C> GrassRing::lift(const SchurVector<C>& v) const {
  Polynomial<C> out(static_cast<std::size_t>(r_));
  for (const auto& [lambda, c] : v)
    out += change_coeffs<C>(symfun::schur_in_elementary(lambda, r_)) * c;
  return out;
}

template <class C>
std::vector<C> GrassRing::coordinates(const SchurVector<C>& v) const {
  std::vector<C> out(basis_.size());
  for (const auto& [lambda, c] : v) {
    auto idx = index_of(lambda);
    if (!idx) throw ParameterError("coordinates: " + lambda.to_string() + " is outside the box");
    out[*idx] = c;
  }
  return out;
}

template <class C>
SchurVector<C> SchurMap::apply(const SchurVector<C>& v) const {
  SchurVector<C> out;
  std::map<Partition, std::size_t> col_of;
  for (std::size_t j = 0; j < source_basis.size(); ++j) col_of[source_basis[j]] = j;
  for (const auto& [lambda, c] : v) {
    auto it = col_of.find(lambda);
    if (it == col_of.end()) throw ParameterError("SchurMap::apply: " + lambda.to_string() + " not in source");
    for (const auto& [row, col, val] : entries) {
      if (col != it->second) continue;
      C add = c * coeff_from_int<C>(val);
      auto [pos, inserted] = out.try_emplace(target_basis[row], add);
      if (!inserted) pos->second += add;
      if (detail::coeff_is_zero(pos->second)) out.erase(pos);
    }
  }
  return out;
}

template <class C>
Polynomial<C> restrict_polynomial(const Polynomial<C>& x, const GrassRing& target) {
  std::vector<Polynomial<C>> images;
  const auto r = static_cast<std::size_t>(target.r());
  for (std::size_t i = 0; i < std::max(x.nvars(), r); ++i)
    images.push_back(i < r ? Polynomial<C>::variable(r, i) : Polynomial<C>(r));
  return x.substitute(images, r);
}

template <class C>
SchurVector<C> PowerSeriesRing::project(const Polynomial<C>& x, const GrassRing& target) const {
  const auto r = static_cast<std::size_t>(target.r());
  std::vector<Polynomial<C>> images;
  for (std::size_t i = 0; i < std::max(generators(), x.nvars()); ++i)
    images.push_back(i < r ? Polynomial<C>::variable(r, i) : Polynomial<C>(r));
  return target.normal_form(truncate(x).substitute(images, r));
}

template <class C>
Polynomial<C> PowerSeriesRing::from_schur(const SchurVector<C>& v) const {
  Polynomial<C> out(generators());
  for (const auto& [lambda, c] : v) {
    if (lambda.weight() > w_) continue;
    out += change_coeffs<C>(symfun::schur_in_elementary(lambda, gens_)) * c;
  }
  return truncate(out);
}

}  // namespace bocalc::grass
