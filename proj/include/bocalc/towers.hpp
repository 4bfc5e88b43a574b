#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/abelian.hpp"
#include "bocalc/grassring.hpp"

namespace bocalc::towers {

using abelian::FGAbelian;
using abelian::IntMatrix;

// How levels continue beyond the supplied data.
//   EventuallyConstant: levels A_0..A_{m−1}, maps f_0..f_{m−2}; A_k = A_{m−1}
//     with identity maps for k ≥ m−1.
//   TemplateRepeating: levels L_0..L_{p−1}, maps f_0..f_{p−1} with
//     f_k : L_{(k+1) mod p} → L_k; the tower is A_k = L_{k mod p}.
//   FinitePrefixOnly: nothing is known past the supplied data.
enum class TailPolicy { EventuallyConstant, TemplateRepeating, FinitePrefixOnly };
std::string to_string(TailPolicy p);
TailPolicy tail_policy_from_string(const std::string& s);

class Tower {
 public:
  Tower(std::vector<FGAbelian> levels, std::vector<IntMatrix> maps, TailPolicy tail);

  TailPolicy tail() const { return tail_; }
  std::size_t supplied_levels() const { return levels_.size(); }
  std::size_t period() const { return levels_.size(); }
  // Known depth: number of levels with data (unbounded for infinite policies).
  std::optional<std::size_t> known_levels() const;

  const FGAbelian& level(std::size_t k) const;
  // f_k : A_{k+1} → A_k.
  IntMatrix map(std::size_t k) const;
  // A_{k+j} → A_k.
  IntMatrix composite(std::size_t k, std::size_t j) const;

  static Tower from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<FGAbelian> levels_;
  std::vector<IntMatrix> maps_;
  TailPolicy tail_;
};

// Free tower ℤ^{C(n,r)} of Schur coordinates: A_k = present(r, n0 + k),
// maps are restrictions of the given kind. Finite prefix of depth+1 levels.
Tower schur_tower(int r, int n0, std::size_t depth, grass::RestrictionKind kind);

enum class MLStatus { Certificate, Refutation, Inconclusive };
std::string to_string(MLStatus s);

struct LevelChain {
  std::size_t level = 0;
  std::size_t step = 1;                  // levels per step of the chain
  std::vector<std::string> images;       // Im(A_{k+j·step} → A_k) for j = 0..
  std::optional<std::size_t> stable_at;  // first j with image j = image j+1
};

struct MLResult {
  MLStatus status = MLStatus::Inconclusive;
  std::string reason;
  std::vector<LevelChain> chains;
  // Refutations: level whose chain strictly decreases and the constant term of
  // the invertible part of the period map's characteristic polynomial.
  std::optional<std::size_t> failing_level;
  std::optional<Rat> unit_test_value;
  nlohmann::json to_json() const;
};

MLResult check_mittag_leffler(const Tower& t, std::size_t window);

// Evidence that lim¹ vanishes.
struct Lim1Certificate {
  bool valid = false;
  std::string reason;
};
Lim1Certificate certificate_from(const MLResult& r);

struct SurjectiveLimit {
  std::size_t depth = 0;
  FGAbelian group;          // A_depth
  IntMatrix projection;     // A_depth → A_{depth−1} (empty at depth 0)
  Lim1Certificate lim1;
  std::string statement;
  nlohmann::json to_json() const;
};
SurjectiveLimit lim_of_surjective(const Tower& t, std::size_t depth);

struct AssembledElement {
  std::size_t depth = 0;
  std::vector<std::vector<Int>> components;  // one per level 0..depth
  std::string note;
  nlohmann::json to_json() const;
};
AssembledElement milnor_assemble(const Tower& t, const Lim1Certificate& cert, const std::vector<std::vector<Int>>& elements);

}  // namespace bocalc::towers
