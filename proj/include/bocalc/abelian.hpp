#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/arith.hpp"
#include "bocalc/matrix.hpp"

namespace bocalc::abelian {

using IntMatrix = Matrix<Int>;

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i ≥ 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Integer kernel basis (columns) of A.
IntMatrix integer_kernel(const IntMatrix& a);

// Is v in the column span of A over Z?
bool in_column_span(const IntMatrix& a, const std::vector<Int>& v);

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

// Z^g modulo the column span of a g × m relation matrix.
class FGAbelian {
 public:
  FGAbelian() = default;
  FGAbelian(std::size_t generators, IntMatrix relations);
  // Cyclic orders; 0 stands for Z.
  static FGAbelian from_orders(const std::vector<Int>& orders);

  std::size_t generators() const { return gens_; }
  const IntMatrix& relations() const { return rel_; }

  // Torsion invariant factors (> 1) in divisibility order.
  const std::vector<Int>& invariant_factors() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_free() const { return torsion_.empty(); }
  std::optional<Int> order() const;

  // v ≡ 0 in the group.
  bool is_zero_vector(const std::vector<Int>& v) const;
  // Columns of S generate a subgroup; is v in it?
  bool in_subgroup(const IntMatrix& s, const std::vector<Int>& v) const;
  bool subgroup_contains(const IntMatrix& big, const IntMatrix& small) const;

  bool same_presentation(const FGAbelian& o) const { return gens_ == o.gens_ && rel_ == o.rel_; }
  bool isomorphic(const FGAbelian& o) const {
    return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
  }

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::size_t gens_ = 0;
  IntMatrix rel_;
  std::vector<Int> torsion_;
  std::size_t free_rank_ = 0;
};

// f: Z^{src.gens} → Z^{tgt.gens} induces a homomorphism src → tgt.
bool is_well_defined(const IntMatrix& f, const FGAbelian& src, const FGAbelian& tgt);
FGAbelian cokernel(const IntMatrix& f, const FGAbelian& tgt);
// Subgroup of the target generated by the image, as a quotient presentation.
FGAbelian image(const IntMatrix& f, const FGAbelian& src, const FGAbelian& tgt);
bool is_injective(const IntMatrix& f, const FGAbelian& src, const FGAbelian& tgt);
bool is_surjective(const IntMatrix& f, const FGAbelian& tgt);
// Kernel of f as a subgroup of src, given by generator columns.
IntMatrix kernel_generators(const IntMatrix& f, const FGAbelian& src, const FGAbelian& tgt);

IntMatrix int_matrix_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json int_matrix_to_json(const IntMatrix& m);

}  // namespace bocalc::abelian
