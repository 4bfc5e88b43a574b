#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/arith.hpp"

namespace bocalc::classcalc {

enum class Symmetry { Symplectic, Orthogonal, Plain };
std::string to_string(Symmetry s);
// Symmetry type of A ⊠ B.
Symmetry tensor_symmetry(Symmetry a, Symmetry b);

struct BundleSymbol {
  std::string name;
  long rank = 0;
  Symmetry symmetry = Symmetry::Plain;
};

// One tensor factor: symbol^{⊕ multiplicity}.
struct Factor {
  std::string symbol;
  long multiplicity = 1;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

// A ⊠ B ⊠ ...; the empty word is the unit.
using Word = std::vector<Factor>;

std::string word_to_string(const Word& w);

// Integer combination of tensor words.
class FormalClass {
 public:
  FormalClass() = default;
  static FormalClass word(Word w, Int coeff = Int(1));
  // [symbol^{⊕ mult}]
  static FormalClass symbol(const std::string& name, long multiplicity = 1);

  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Word& w) const;

  FormalClass& operator+=(const FormalClass& o);
  FormalClass& operator-=(const FormalClass& o);
  friend FormalClass operator+(FormalClass a, const FormalClass& b) { return a += b; }
  friend FormalClass operator-(FormalClass a, const FormalClass& b) { return a -= b; }
  friend FormalClass operator*(const Int& k, const FormalClass& a);
  friend FormalClass operator*(long k, const FormalClass& a) { return Int(k) * a; }
  friend bool operator==(const FormalClass&, const FormalClass&) = default;

  // Bilinear external product: words concatenate.
  friend FormalClass boxtimes(const FormalClass& a, const FormalClass& b);

  void add(const Word& w, const Int& c);
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::map<Word, Int> terms_;
};

// Reverse every word (the factor swap on two-fold products).
FormalClass swap(const FormalClass& x);
// Each factor A^{⊕k} becomes k copies: [A^{⊕k} ⊠ X] = k[A ⊠ X].
FormalClass distribute(const FormalClass& x);

// Rewrites on classes. A substitution replaces one factor symbol by a class
// (complement elimination X^⊥ → m[T] − [X] and declared decompositions); a
// pair rule replaces two adjacent factors. Multiplicities are always
// distributed first: [A^{⊕k} ⊠ X] → k[A ⊠ X].
struct SubstitutionRule {
  std::string name;
  std::string symbol;
  FormalClass replacement;
};
struct PairRule {
  std::string name;
  std::string left;
  std::string right;
  FormalClass replacement;
};

struct TraceStep {
  std::string rule;
  Word before;
  Int coeff;
  FormalClass after;  // replacement for coeff·[before]
};

struct RuleCheck {
  std::string rule;
  bool rank_ok = false;
  bool symmetry_ok = false;
};

struct ConfluenceReport {
  bool confluent = false;
  std::vector<std::string> critical_pairs;  // descriptions of examined overlaps
  std::vector<std::string> outside_domain;  // overlaps needing more factors than allowed
  std::size_t words_compared = 0;           // short words reduced under both strategies
  std::vector<std::string> failures;
};

// Classes live on a product of at most max_factors spaces, so input words
// have at most that many factors.
class RelationSet {
 public:
  explicit RelationSet(std::size_t max_factors = 2) : max_factors_(max_factors) {}
  std::size_t max_factors() const { return max_factors_; }
  void declare(BundleSymbol s);
  void add_substitution(SubstitutionRule r);
  void add_pair(PairRule r);

  const BundleSymbol& symbol(const std::string& name) const;
  bool knows(const std::string& name) const { return symbols_.count(name) != 0; }

  long rank(const Word& w) const;
  Int rank(const FormalClass& x) const;
  Symmetry symmetry(const Word& w) const;

  // Each rule must preserve rank and symmetry type.
  std::vector<RuleCheck> check_rules() const;
  // Overlaps between pair rules, and between pair rules and substitutions, are
  // reduced both ways and compared.
  ConfluenceReport check_confluence() const;

  // Normal form; throws ParameterError on undeclared symbols or words with
  // too many factors.
  FormalClass expand(const FormalClass& x, std::vector<TraceStep>* trace = nullptr) const;

  nlohmann::json symbols_json() const;
  nlohmann::json rules_json() const;

  // Leftmost substitution first, or rightmost pair rule first.
  enum class Strategy { SubstitutionsLeft, PairsRight };

 private:
  void validate(const FormalClass& x) const;
  FormalClass reduce(const FormalClass& x, Strategy s, std::vector<TraceStep>* trace) const;
  std::optional<FormalClass> rewrite_word(const Word& w, Strategy s, std::string* rule) const;
  std::size_t max_factors_;
  std::map<std::string, BundleSymbol> symbols_;
  std::vector<SubstitutionRule> subs_;
  std::vector<PairRule> pairs_;
};

struct IdentityCheck {
  std::string name;
  FormalClass lhs;
  FormalClass rhs;
  bool holds = false;
  nlohmann::json to_json() const;
};

struct FormulaCertificate {
  bool equal = false;
  FormalClass lhs_input, rhs_input;
  FormalClass lhs_normal, rhs_normal;
  Int lhs_rank, rhs_rank;
  std::vector<TraceStep> lhs_trace, rhs_trace;
  std::vector<IdentityCheck> auxiliary;
  std::vector<RuleCheck> rule_checks;
  ConfluenceReport confluence;
  std::string convention;
  bool ok() const;
  nlohmann::json to_json() const;
};

// Standard symbol names.
namespace sym {
inline const std::string H = "H";
inline const std::string Hplus = "H+";
inline const std::string O = "O";
}  // namespace sym

// Relations of the GW computation over HGr(n,2n) × HP^1: U_{2n}, U, their
// complements, the pulled-back V_{16n}, 𝖧 and 𝖧₊.
RelationSet gw_relations(int n, int i);
FormulaCertificate verify_gw_formula(int n, int i);

// Plain K_0 analogue with U'_n, U''_n, U'_1, U''_1 and 𝒪.
RelationSet k0_relations(int n, int i);
FormulaCertificate verify_k0_formula(int n, int i);

// Relations with only U_{n,2n}, 𝖧, 𝖧₊ and [𝖧⊠𝖧] → 2[𝖧₊].
RelationSet mu_relations(int n);
std::string universal_symbol(int n);  // "U_{n,2n}"
// ([U] + (i−n)[𝖧]) ⊠ ([U] + (j−n)[𝖧]) in normal form.
FormalClass mu_class(int n, int i, int j);

// The rule [𝖧⊠𝖧] → 2[𝖧₊] checked against explicit Gram matrices.
struct TensorRuleValidation {
  bool isometry_ok = false;
  bool invariants_ok = false;
  std::string gram_convention;
  std::vector<std::vector<std::string>> gram;
  std::vector<std::vector<std::string>> isometry;
  nlohmann::json to_json() const;
};
TensorRuleValidation validate_hyperbolic_tensor_rule();

}  // namespace bocalc::classcalc
