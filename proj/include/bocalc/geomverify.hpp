#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/matrix.hpp"
#include "bocalc/polynomial.hpp"

namespace bocalc::geom {

using RPoly = Polynomial<Rat>;
using PolyMatrix = Matrix<RPoly>;
using RatMatrix = Matrix<Rat>;
// A linear form on R^d, as its coordinate row.
using LinearForm = std::vector<RPoly>;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();
  bool ok() const;
  void add(std::string name, bool passed, std::string detail = {});
  nlohmann::json to_json() const;
};

// Entries in ℚ[t]; t is variable 0 of a one-variable ring.
PolyMatrix m_path();
PolyMatrix m1();
std::vector<PolyMatrix> m1_factors();
PolyMatrix evaluate_at(const PolyMatrix& m, const Rat& t);
PolyMatrix constant_matrix(const RatMatrix& m, std::size_t nvars = 1);

// Constant forms B with MᵀBM = B identically, split into symmetric and skew
// parts. Each basis is in reduced echelon form on the 16 (n²) entries.
struct InvariantForms {
  std::vector<RatMatrix> symmetric;
  std::vector<RatMatrix> skew;
  std::size_t dimension() const { return symmetric.size() + skew.size(); }
  nlohmann::json to_json() const;
};
InvariantForms solve_invariant_forms(const PolyMatrix& m);
bool preserves(const PolyMatrix& m, const RatMatrix& b);

Report verify_M_path();
Report verify_M1_factorization();

// Σ_i s_{2i−1}s_{2i} = Σ_{i≤j} a_ij x_i x_j in ℚ[x_1..x_r, a_ij].
bool quadratic_section_identity(int r);
Report quadratic_section_report(int max_r);

// u ∧ v as a skew matrix: (u ∧ v)_ij = u_i v_j − u_j v_i.
PolyMatrix wedge(const LinearForm& u, const LinearForm& v);

struct LiftData {
  PolyMatrix phi;
  RPoly g;
  std::vector<LinearForm> u, v, w;
};

// Σ_i (u_{2i−1} + g v_{2i−1}) ∧ (u_{2i} + g v_{2i}) + Σ_j g w_{2j−1} ∧ g w_{2j}.
PolyMatrix lift_sum(const LiftData& d);
// Exact identity lift_sum = φ.
bool verify_symplectic_lift(const LiftData& d);
// φ − lift_sum(without w) ≡ 0 mod g².
bool verify_first_order(const LiftData& d);
// φ − Σ u∧u ≡ g Σ_j u_j ∧ (−1)^j v_j mod g², with v' in alternating indexing.
bool alternating_congruence(const LiftData& d);
// Converts alternating indexing to the product-expansion indexing: v_{2i−1} = −v'_{2i}, v_{2i} = −v'_{2i−1}.
std::vector<LinearForm> from_alternating_indexing(const std::vector<LinearForm>& vp);

// Over ℚ[t]: φ = (1+t+t²)J, g = t, u the coordinate forms, with v and w
// chosen so that the lift is exact.
LiftData lift_example();
Report verify_symplectic_lift_report();

}  // namespace bocalc::geom
