#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/arith.hpp"
#include "bocalc/matrix.hpp"
#include "bocalc/polynomial.hpp"

namespace bocalc::chain {

using Poly = Polynomial<Rat>;  // negative exponents allowed after inverting a variable
using PMat = Matrix<Poly>;

// Every sign used by duals, shifts, transposes and tensor products.
struct Conventions {
  // σ(n,k) = (−1)^{n + k(n−k)} when true, (−1)^{k(n−k)} otherwise.
  bool transpose_includes_n = true;

  static Conventions standard() { return {}; }
  static Conventions without_global_sign() { return {false}; }

  // (d^∨)_k = dual_sign(k)·(d_{1−k})ᵀ
  static int dual_sign(int k) { return k % 2 == 0 ? 1 : -1; }
  // X → X^∨∨ is eta(k)·id on X_k
  static int eta(int k) { return k % 2 == 0 ? 1 : -1; }
  // X[n]_k = X_{k−n} with differential shift_sign(n)·d
  static int shift_sign(int n) { return n % 2 == 0 ? 1 : -1; }
  // d(m⊗n) = dm⊗n + tensor_sign(|m|)·m⊗dn
  static int tensor_sign(int a) { return a % 2 == 0 ? 1 : -1; }
  // (φ⊗ψ) on X_a⊗Y_b is form_sign(a,b,r)·φ_a⊗ψ_b, r = deg φ
  static int form_sign(int a, int b, int r) { return (b * (r - a)) % 2 == 0 ? 1 : -1; }
  // m⊗n ↦ swap_sign(|m|,|n|)·n⊗m
  static int swap_sign(int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; }
  // φᵗ_k = transpose_sign(n,k)·(φ_{n−k})ᵀ
  int transpose_sign(int n, int k) const;

  nlohmann::json to_json() const;
};

PMat zero_pmat(std::size_t rows, std::size_t cols);
PMat identity_pmat(std::size_t n, int sign = 1);
// Kronecker product with the left factor's index major.
PMat kron(const PMat& a, const PMat& b);

// Bounded complex of free modules over Q[x_1..x_m]; d_k : X_k → X_{k−1}.
class FreeComplex {
 public:
  FreeComplex() = default;
  // ranks[j] is the rank in degree lo + j; diffs maps k to d_k.
  FreeComplex(std::size_t nvars, int lo, std::vector<std::size_t> ranks, std::map<int, PMat> diffs);

  std::size_t nvars() const { return nvars_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int k) const;
  // Zero matrix of the right shape when not stored.
  PMat d(int k) const;
  bool d_squared_zero() const;
  std::size_t total_rank() const;

  nlohmann::json to_json(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_ = 0;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::map<int, PMat> d_;
};

std::vector<std::string> default_variable_names(std::size_t n);

// Degree-0 map X → Y given by f_k : X_k → Y_k.
using ChainMap = std::map<int, PMat>;
PMat component(const ChainMap& f, int k, std::size_t rows, std::size_t cols);
bool is_chain_map(const ChainMap& f, const FreeComplex& x, const FreeComplex& y);

FreeComplex dual(const FreeComplex& x);
FreeComplex shift(const FreeComplex& x, int n);
// η : X → X^∨∨
ChainMap eta(const FreeComplex& x);

// (X, n, φ) with φ_k : X_k → (X_{n−k})^∨, a chain map X → X^∨[n].
struct SymmetricComplex {
  FreeComplex x;
  int n = 0;
  ChainMap phi;

  PMat phi_at(int k) const;
  ChainMap transpose(const Conventions& c = Conventions::standard()) const;
  bool is_chain_map() const;
  bool is_symmetric(const Conventions& c = Conventions::standard()) const;
  // Each φ_k is a signed permutation matrix.
  bool is_unimodular() const;
  nlohmann::json to_json(const std::vector<std::string>& names = {}) const;
};

// ⟨1⟩ in degree 0.
SymmetricComplex unit_form(std::size_t nvars = 0);

// p-subsets of {0..n−1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int p);

// Exterior complex over Q[x_1..x_n] with contraction differentials in
// degrees n..0 and the canonical form Θ to its shifted dual.
SymmetricComplex koszul(int n);

// s with ds + sd = id over Q[x][1/x_i]; i is 1-based.
ChainMap contracting_homotopy(const SymmetricComplex& k, int i);
bool is_contracting_homotopy(const FreeComplex& x, const ChainMap& s);

// Presentation of H_0 as the cokernel of d_1.
PMat h0_presentation(const FreeComplex& x);

// Position of (a, i, j) in (X⊗Y)_k: degree of the X factor, basis indices.
using TensorBasis = std::vector<std::tuple<int, std::size_t, std::size_t>>;
TensorBasis tensor_basis(const FreeComplex& x, const FreeComplex& y, int k);

// Y's variables are appended after X's when disjoint.
FreeComplex tensor(const FreeComplex& x, const FreeComplex& y, bool disjoint = true);
SymmetricComplex tensor_pair(const SymmetricComplex& m, const SymmetricComplex& n, bool disjoint = true);

// f : A → B with f^∨ φ_B f = φ_A.
bool is_isometry(const ChainMap& f, const SymmetricComplex& a, const SymmetricComplex& b);

// e_S ⊗ e_T ↦ e_{S ∪ (T + a)} from K(a)⊗K(b) to K(a+b).
ChainMap koszul_product_map(int a, int b);
// (X⊗Y)⊗Z → X⊗(Y⊗Z) on bases.
ChainMap reassociation(const FreeComplex& x, const FreeComplex& y, const FreeComplex& z);
// m⊗n ↦ swap_sign·n⊗m from X⊗Y to Y⊗X.
ChainMap swap_map(const FreeComplex& x, const FreeComplex& y);

struct SwapSignReport {
  int r = 0;
  int s = 0;
  int sign = 0;      // transported form = sign·(φ⊗ψ), 0 if not a scalar multiple
  int expected = 0;  // (−1)^{rs}
  bool swap_is_chain_map = false;
  bool ok() const { return swap_is_chain_map && sign == expected; }
  // "1" or "ε"
  std::string sign_symbol() const;
  nlohmann::json to_json() const;
};
// M and N must share no variables with each other's role: N⊗M is formed with
// N's variables first.
SwapSignReport swap_sign_check(const SymmetricComplex& m, const SymmetricComplex& n);

struct KoszulReport {
  int n = 0;
  SymmetricComplex k;
  bool d_squared_zero = false;
  bool theta_chain_map = false;
  bool theta_symmetric = false;
  bool theta_unimodular = false;
  bool h0_presentation_ok = false;
  std::vector<bool> homotopies_ok;  // one per inverted variable
  bool ok() const;
  nlohmann::json to_json() const;
};
KoszulReport koszul_report(int n);

}  // namespace bocalc::chain
