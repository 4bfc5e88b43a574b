#include "bocalc/classcalc.hpp"

#include <functional>

#include "bocalc/forms.hpp"

namespace bocalc::classcalc {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symplectic: return "symplectic";
    case Symmetry::Orthogonal: return "orthogonal";
    case Symmetry::Plain: return "plain";
  }
  return "?";
}

Symmetry tensor_symmetry(Symmetry a, Symmetry b) {
  if (a == Symmetry::Plain || b == Symmetry::Plain) return Symmetry::Plain;
  return a == b ? Symmetry::Orthogonal : Symmetry::Symplectic;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "⊠";
    out += w[i].symbol;
    if (w[i].multiplicity != 1) out += "^{⊕" + std::to_string(w[i].multiplicity) + "}";
  }
  return out;
}

// ---------------------------------------------------------------- FormalClass

FormalClass FormalClass::word(Word w, Int coeff) {
  FormalClass x;
  x.add(w, coeff);
  return x;
}

FormalClass FormalClass::symbol(const std::string& name, long multiplicity) {
  return word(Word{Factor{name, multiplicity}});
}

Int FormalClass::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void FormalClass::add(const Word& w, const Int& c) {
  if (sgn(c) == 0) return;
  Int& slot = terms_[w];
  slot += c;
  if (sgn(slot) == 0) terms_.erase(w);
}

FormalClass& FormalClass::operator+=(const FormalClass& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FormalClass& FormalClass::operator-=(const FormalClass& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FormalClass operator*(const Int& k, const FormalClass& a) {
  FormalClass out;
  for (const auto& [w, c] : a.terms_) out.add(w, k * c);
  return out;
}

FormalClass boxtimes(const FormalClass& a, const FormalClass& b) {
  FormalClass out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

std::string FormalClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = sgn(c) < 0;
    const Int a = abs(c);
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    if (a != 1) out += a.get_str();
    out += "[" + word_to_string(w) + "]";
  }
  return out;
}

nlohmann::json FormalClass::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : terms_) terms.push_back({{"word", word_to_string(w)}, {"coeff", c.get_str()}});
  return {{"text", to_string()}, {"terms", terms}};
}

FormalClass swap(const FormalClass& x) {
  FormalClass out;
  for (const auto& [w, c] : x.terms()) out.add(Word(w.rbegin(), w.rend()), c);
  return out;
}

FormalClass distribute(const FormalClass& x) {
  FormalClass out;
  for (const auto& [w, c] : x.terms()) {
    Int k = c;
    Word plain;
    for (const auto& f : w) {
      if (f.multiplicity < 0) throw ParameterError("negative multiplicity in " + word_to_string(w));
      k *= f.multiplicity;
      plain.push_back(Factor{f.symbol, 1});
    }
    out.add(plain, k);
  }
  return out;
}

// ---------------------------------------------------------------- RelationSet

void RelationSet::declare(BundleSymbol s) {
  if (s.rank < 0) throw ParameterError("symbol " + s.name + " has negative rank");
  if (s.symmetry == Symmetry::Symplectic && s.rank % 2 != 0)
    throw ParameterError("symplectic symbol " + s.name + " has odd rank");
  symbols_[s.name] = std::move(s);
}

void RelationSet::add_substitution(SubstitutionRule r) {
  if (!knows(r.symbol)) throw ParameterError("rule " + r.name + " rewrites an undeclared symbol");
  validate(r.replacement);
  subs_.push_back(std::move(r));
}

void RelationSet::add_pair(PairRule r) {
  if (!knows(r.left) || !knows(r.right)) throw ParameterError("rule " + r.name + " uses an undeclared symbol");
  validate(r.replacement);
  pairs_.push_back(std::move(r));
}

const BundleSymbol& RelationSet::symbol(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) throw ParameterError("unknown symbol '" + name + "'");
  return it->second;
}

long RelationSet::rank(const Word& w) const {
  long r = 1;
  for (const auto& f : w) r *= symbol(f.symbol).rank * f.multiplicity;
  return r;
}

Int RelationSet::rank(const FormalClass& x) const {
  Int r(0);
  for (const auto& [w, c] : x.terms()) r += c * rank(w);
  return r;
}

Symmetry RelationSet::symmetry(const Word& w) const {
  if (w.empty()) return Symmetry::Orthogonal;
  Symmetry s = symbol(w.front().symbol).symmetry;
  for (std::size_t i = 1; i < w.size(); ++i) s = tensor_symmetry(s, symbol(w[i].symbol).symmetry);
  return s;
}

void RelationSet::validate(const FormalClass& x) const {
  for (const auto& [w, c] : x.terms()) {
    (void)c;
    for (const auto& f : w) (void)symbol(f.symbol);
  }
}

std::vector<RuleCheck> RelationSet::check_rules() const {
  std::vector<RuleCheck> out;
  auto sym_ok = [&](const FormalClass& x, Symmetry s) {
    for (const auto& [w, c] : x.terms())
      if (symmetry(w) != s) return false;
    return true;
  };
  for (const auto& r : subs_) {
    const auto& s = symbol(r.symbol);
    out.push_back({r.name, rank(r.replacement) == s.rank, sym_ok(r.replacement, s.symmetry)});
  }
  for (const auto& r : pairs_) {
    const auto& a = symbol(r.left);
    const auto& b = symbol(r.right);
    out.push_back({r.name, rank(r.replacement) == a.rank * b.rank,
                   sym_ok(r.replacement, tensor_symmetry(a.symmetry, b.symmetry))});
  }
  return out;
}

std::optional<FormalClass> RelationSet::rewrite_word(const Word& w, Strategy s, std::string* rule) const {
  auto splice = [&](std::size_t pos, std::size_t len, const FormalClass& repl) {
    FormalClass out;
    const FormalClass flat = distribute(repl);
    for (const auto& [rw, rc] : flat.terms()) {
      Word nw(w.begin(), w.begin() + static_cast<long>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(pos + len), w.end());
      out.add(nw, rc);
    }
    return out;
  };
  auto try_subst = [&](std::size_t pos) -> std::optional<FormalClass> {
    for (const auto& r : subs_)
      if (w[pos].symbol == r.symbol) {
        if (rule) *rule = r.name;
        return splice(pos, 1, r.replacement);
      }
    return std::nullopt;
  };
  auto try_pair = [&](std::size_t pos) -> std::optional<FormalClass> {
    for (const auto& r : pairs_)
      if (w[pos].symbol == r.left && w[pos + 1].symbol == r.right) {
        if (rule) *rule = r.name;
        return splice(pos, 2, r.replacement);
      }
    return std::nullopt;
  };
  const std::size_t n = w.size();
  if (s == Strategy::SubstitutionsLeft) {
    for (std::size_t p = 0; p < n; ++p)
      if (auto x = try_subst(p)) return x;
    for (std::size_t p = 0; p + 1 < n; ++p)
      if (auto x = try_pair(p)) return x;
  } else {
    for (std::size_t p = n; p-- > 1;)
      if (auto x = try_pair(p - 1)) return x;
    for (std::size_t p = n; p-- > 0;)
      if (auto x = try_subst(p)) return x;
  }
  return std::nullopt;
}

FormalClass RelationSet::reduce(const FormalClass& x, Strategy s, std::vector<TraceStep>* trace) const {
  FormalClass cur = distribute(x);
  for (int step = 0;; ++step) {
    if (step > 100000) throw std::logic_error("rewriting does not terminate");
    bool changed = false;
    for (const auto& [w, c] : cur.terms()) {
      std::string rule;
      auto repl = rewrite_word(w, s, &rule);
      if (!repl) continue;
      const Word before = w;
      const Int coeff = c;
      const FormalClass after = coeff * *repl;
      if (trace) trace->push_back({rule, before, coeff, after});
      cur.add(before, -coeff);
      cur += after;
      changed = true;
      break;
    }
    if (!changed) return cur;
  }
}

FormalClass RelationSet::expand(const FormalClass& x, std::vector<TraceStep>* trace) const {
  validate(x);
  for (const auto& [w, c] : x.terms()) {
    (void)c;
    if (w.size() > max_factors_)
      throw ParameterError("word " + word_to_string(w) + " has more than " + std::to_string(max_factors_) + " factors");
  }
  return reduce(x, Strategy::SubstitutionsLeft, trace);
}

ConfluenceReport RelationSet::check_confluence() const {
  ConfluenceReport rep;
  auto compare = [&](const std::string& label, const FormalClass& a, const FormalClass& b) {
    const auto na = reduce(a, Strategy::SubstitutionsLeft, nullptr);
    const auto nb = reduce(b, Strategy::SubstitutionsLeft, nullptr);
    if (!(na == nb)) rep.failures.push_back(label + ": " + na.to_string() + " ≠ " + nb.to_string());
  };
  // Pair rule against a substitution on either of its letters.
  for (const auto& p : pairs_) {
    const Word w{{p.left, 1}, {p.right, 1}};
    for (const auto& s : subs_) {
      for (std::size_t pos = 0; pos < 2; ++pos) {
        if (w[pos].symbol != s.symbol) continue;
        const std::string label = p.name + " / " + s.name + " on " + word_to_string(w);
        rep.critical_pairs.push_back(label);
        FormalClass via_sub;
        const FormalClass flat = distribute(s.replacement);
        for (const auto& [rw, rc] : flat.terms()) {
          Word nw = w;
          nw.erase(nw.begin() + static_cast<long>(pos));
          nw.insert(nw.begin() + static_cast<long>(pos), rw.begin(), rw.end());
          via_sub.add(nw, rc);
        }
        compare(label, p.replacement, via_sub);
      }
    }
  }
  // Pair rules overlapping on a shared letter need three factors.
  for (const auto& a : pairs_)
    for (const auto& b : pairs_)
      if (a.right == b.left) {
        const Word w{{a.left, 1}, {a.right, 1}, {b.right, 1}};
        const std::string label = a.name + " / " + b.name + " on " + word_to_string(w);
        if (w.size() > max_factors_) {
          rep.outside_domain.push_back(label);
          continue;
        }
        rep.critical_pairs.push_back(label);
        compare(label, boxtimes(a.replacement, FormalClass::symbol(b.right)),
                boxtimes(FormalClass::symbol(a.left), b.replacement));
      }
  // Every short word reduced under both strategies.
  std::vector<std::string> names;
  for (const auto& [name, s] : symbols_) names.push_back(name);
  std::function<void(Word&)> walk = [&](Word& w) {
    if (!w.empty()) {
      const auto x = FormalClass::word(w);
      const auto a = reduce(x, Strategy::SubstitutionsLeft, nullptr);
      const auto b = reduce(x, Strategy::PairsRight, nullptr);
      bool inside = true;
      for (const auto* r : {&a, &b})
        for (const auto& [rw, rc] : r->terms()) {
          (void)rc;
          if (rw.size() > max_factors_) inside = false;
        }
      if (!inside) {
        rep.outside_domain.push_back(word_to_string(w) + " expands beyond " + std::to_string(max_factors_) + " factors");
        return;
      }
      ++rep.words_compared;
      if (!(a == b)) rep.failures.push_back("strategies disagree on " + word_to_string(w));
    }
    if (w.size() == max_factors_) return;
    for (const auto& n : names) {
      w.push_back({n, 1});
      walk(w);
      w.pop_back();
    }
  };
  Word w;
  walk(w);
  rep.confluent = rep.failures.empty();
  return rep;
}

nlohmann::json RelationSet::symbols_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [name, s] : symbols_)
    out.push_back({{"name", name}, {"rank", s.rank}, {"symmetry", to_string(s.symmetry)}});
  return out;
}

nlohmann::json RelationSet::rules_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : subs_)
    out.push_back({{"name", r.name}, {"lhs", "[" + r.symbol + "]"}, {"rhs", r.replacement.to_string()}});
  for (const auto& r : pairs_)
    out.push_back({{"name", r.name}, {"lhs", "[" + r.left + "⊠" + r.right + "]"}, {"rhs", r.replacement.to_string()}});
  return out;
}

// ---------------------------------------------------------------- certificates

nlohmann::json IdentityCheck::to_json() const {
  return {{"name", name}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"holds", holds}};
}

bool FormulaCertificate::ok() const {
  if (!equal || sgn(lhs_rank) != 0 || sgn(rhs_rank) != 0 || !confluence.confluent) return false;
  for (const auto& a : auxiliary)
    if (!a.holds) return false;
  for (const auto& r : rule_checks)
    if (!r.rank_ok || !r.symmetry_ok) return false;
  return true;
}

namespace {

nlohmann::json trace_json(const std::vector<TraceStep>& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : t)
    out.push_back({{"rule", s.rule}, {"word", word_to_string(s.before)}, {"coeff", s.coeff.get_str()}, {"replacement", s.after.to_string()}});
  return out;
}

nlohmann::json confluence_json(const ConfluenceReport& c) {
  return {{"confluent", c.confluent},
          {"critical_pairs", c.critical_pairs},
          {"outside_domain", c.outside_domain},
          {"words_compared", c.words_compared},
          {"failures", c.failures}};
}

}  // namespace

nlohmann::json FormulaCertificate::to_json() const {
  nlohmann::json aux = nlohmann::json::array();
  for (const auto& a : auxiliary) aux.push_back(a.to_json());
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : rule_checks) rules.push_back({{"rule", r.rule}, {"rank_ok", r.rank_ok}, {"symmetry_ok", r.symmetry_ok}});
  return {{"ok", ok()},
          {"equal", equal},
          {"lhs", {{"input", lhs_input.to_string()}, {"normal", lhs_normal.to_json()}, {"rank", lhs_rank.get_str()}, {"trace", trace_json(lhs_trace)}}},
          {"rhs", {{"input", rhs_input.to_string()}, {"normal", rhs_normal.to_json()}, {"rank", rhs_rank.get_str()}, {"trace", trace_json(rhs_trace)}}},
          {"auxiliary", aux},
          {"rule_checks", rules},
          {"confluence", confluence_json(confluence)},
          {"convention", convention}};
}

namespace {

FormalClass cls(const std::string& s, long k = 1) { return FormalClass::symbol(s, k); }
FormalClass pair(const std::string& a, long ka, const std::string& b, long kb) {
  return FormalClass::word(Word{{a, ka}, {b, kb}});
}

void check_range(int n, int i) {
  if (n < 1) throw ParameterError("n must be at least 1");
  if (i < -n || i > n) throw ParameterError("|i| exceeds n");
}

IdentityCheck identity(const RelationSet& rs, std::string name, FormalClass lhs, FormalClass rhs) {
  IdentityCheck c{std::move(name), lhs, rhs, false};
  c.holds = rs.expand(lhs) == rs.expand(rhs);
  return c;
}

FormulaCertificate certify(const RelationSet& rs, const FormalClass& lhs, const FormalClass& rhs, std::string convention) {
  FormulaCertificate cert;
  cert.lhs_input = lhs;
  cert.rhs_input = rhs;
  cert.lhs_normal = rs.expand(lhs, &cert.lhs_trace);
  cert.rhs_normal = rs.expand(rhs, &cert.rhs_trace);
  cert.lhs_rank = rs.rank(lhs);
  cert.rhs_rank = rs.rank(rhs);
  // Every rewrite step must preserve rank.
  for (const auto* t : {&cert.lhs_trace, &cert.rhs_trace})
    for (const auto& s : *t)
      if (rs.rank(s.after) != s.coeff * rs.rank(s.before)) throw std::logic_error("rewrite step changed rank: " + s.rule);
  if (rs.rank(cert.lhs_normal) != cert.lhs_rank || rs.rank(cert.rhs_normal) != cert.rhs_rank)
    throw std::logic_error("normal form changed rank");
  cert.equal = cert.lhs_normal == cert.rhs_normal;
  cert.rule_checks = rs.check_rules();
  cert.confluence = rs.check_confluence();
  cert.convention = std::move(convention);
  return cert;
}

const char* kTensorConvention =
    "[H⊠H] → 2[H+]: Gram matrix of H⊗H is the Kronecker product J⊗J with J = [[0,1],[-1,0]] in the basis "
    "e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2; H+ has Gram [[0,1],[1,0]]";

}  // namespace

RelationSet gw_relations(int n, int i) {
  check_range(n, i);
  RelationSet rs;
  const long N = n;
  rs.declare({"U_{2n}", 2 * N, Symmetry::Symplectic});
  rs.declare({"U_{2n}^⊥", 2 * N, Symmetry::Symplectic});
  rs.declare({"U", 2, Symmetry::Symplectic});
  rs.declare({"U^⊥", 2, Symmetry::Symplectic});
  rs.declare({sym::H, 2, Symmetry::Symplectic});
  rs.declare({sym::Hplus, 2, Symmetry::Orthogonal});
  rs.declare({"f*V_{16n}", 16 * N, Symmetry::Orthogonal});
  rs.add_substitution({"complement U_{2n}", "U_{2n}^⊥", cls(sym::H, 2 * N) - cls("U_{2n}")});
  rs.add_substitution({"complement U", "U^⊥", cls(sym::H, 2) - cls("U")});
  rs.add_substitution({"pullback decomposition", "f*V_{16n}",
                       pair("U_{2n}", 1, "U", 1) + pair(sym::H, N - i, "U^⊥", 1) + pair("U_{2n}^⊥", 1, sym::H, 1) +
                           cls(sym::Hplus, 2 * N + 2 * i)});
  rs.add_pair({"hyperbolic tensor", sym::H, sym::H, 2 * cls(sym::Hplus)});
  return rs;
}

FormulaCertificate verify_gw_formula(int n, int i) {
  const RelationSet rs = gw_relations(n, i);
  const long N = n;
  const FormalClass lhs = cls("f*V_{16n}") - Int(8 * N) * cls(sym::Hplus);
  const FormalClass rhs = boxtimes(cls("U_{2n}") - Int(N - i) * cls(sym::H), cls("U") - cls(sym::H));
  FormulaCertificate cert = certify(rs, lhs, rhs, kTensorConvention);
  cert.auxiliary.push_back(identity(rs, "orthogonal sum U_{2n} ⊕ U_{2n}^⊥", cls("U_{2n}") + cls("U_{2n}^⊥"), cls(sym::H, 2 * N)));
  cert.auxiliary.push_back(identity(rs, "orthogonal sum U ⊕ U^⊥", cls("U") + cls("U^⊥"), cls(sym::H, 2)));
  cert.auxiliary.push_back(identity(rs, "bilinear expansion",
                                    rhs,
                                    pair("U_{2n}", 1, "U", 1) + pair(sym::H, N - i, "U^⊥", 1) +
                                        pair("U_{2n}^⊥", 1, sym::H, 1) - Int(6 * N - 2 * i) * cls(sym::Hplus)));
  cert.auxiliary.push_back(identity(rs, "ambient bundle",
                                    pair(sym::H, 2 * N, "U", 1) + pair(sym::H, 2 * N, "U^⊥", 1) +
                                        pair(sym::H, 2 * N, sym::H, 1) + cls(sym::Hplus, 4 * N),
                                    cls(sym::Hplus, 16 * N)));
  IdentityCheck r{"rank of the subbundle is 16n", cls("f*V_{16n}"), cls(sym::Hplus, 8 * N), false};
  r.holds = rs.rank(rs.expand(cls("f*V_{16n}"))) == 16 * N;
  cert.auxiliary.push_back(r);
  return cert;
}

RelationSet k0_relations(int n, int i) {
  check_range(n, i);
  RelationSet rs;
  const long N = n;
  rs.declare({"U'_n", N, Symmetry::Plain});
  rs.declare({"U''_n", N, Symmetry::Plain});
  rs.declare({"U'_1", 1, Symmetry::Plain});
  rs.declare({"U''_1", 1, Symmetry::Plain});
  rs.declare({sym::O, 1, Symmetry::Plain});
  rs.declare({"h*U'_{4n}", 4 * N, Symmetry::Plain});
  rs.add_substitution({"complement U'_n", "U''_n", cls(sym::O, 2 * N) - cls("U'_n")});
  rs.add_substitution({"complement U'_1", "U''_1", cls(sym::O, 2) - cls("U'_1")});
  rs.add_substitution({"pullback decomposition", "h*U'_{4n}",
                       pair("U'_n", 1, "U'_1", 1) + pair(sym::O, N - i, "U''_1", 1) + pair("U''_n", 1, sym::O, 1) +
                           pair(sym::O, N + i, sym::O, 1)});
  return rs;
}

FormulaCertificate verify_k0_formula(int n, int i) {
  const RelationSet rs = k0_relations(n, i);
  const long N = n;
  const FormalClass oo = pair(sym::O, 1, sym::O, 1);
  const FormalClass lhs = cls("h*U'_{4n}") - Int(4 * N) * oo;
  const FormalClass rhs = boxtimes(cls("U'_n") - Int(N - i) * cls(sym::O), cls("U'_1") - cls(sym::O));
  FormulaCertificate cert = certify(rs, lhs, rhs, "plain K0 classes; [O] is the trivial line bundle");
  cert.auxiliary.push_back(identity(rs, "bilinear expansion", rhs,
                                    pair("U'_n", 1, "U'_1", 1) + pair(sym::O, N - i, "U''_1", 1) +
                                        pair("U''_n", 1, sym::O, 1) - Int(3 * N - i) * oo));
  cert.auxiliary.push_back(identity(rs, "(U'_n⊠U'_1) ⊕ (U''_n⊠U'_1) = O^{2n}⊠U'_1",
                                    pair("U'_n", 1, "U'_1", 1) + pair("U''_n", 1, "U'_1", 1), pair(sym::O, 2 * N, "U'_1", 1)));
  cert.auxiliary.push_back(identity(rs, "(O^{n-i}⊠U''_1) ⊕ (O^{n+i}⊠U''_1) = O^{2n}⊠U''_1",
                                    pair(sym::O, N - i, "U''_1", 1) + pair(sym::O, N + i, "U''_1", 1),
                                    pair(sym::O, 2 * N, "U''_1", 1)));
  cert.auxiliary.push_back(identity(rs, "(U''_n⊠O) ⊕ (U'_n⊠O) = O^{2n}⊠O",
                                    pair("U''_n", 1, sym::O, 1) + pair("U'_n", 1, sym::O, 1), pair(sym::O, 2 * N, sym::O, 1)));
  cert.auxiliary.push_back(identity(rs, "(O^{n+i}⊠O) ⊕ (O^{n-i}⊠O) = O^{2n}⊠O",
                                    pair(sym::O, N + i, sym::O, 1) + pair(sym::O, N - i, sym::O, 1),
                                    pair(sym::O, 2 * N, sym::O, 1)));
  return cert;
}

std::string universal_symbol(int) { return "U_{n,2n}"; }

RelationSet mu_relations(int n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  RelationSet rs;
  rs.declare({universal_symbol(n), 2L * n, Symmetry::Symplectic});
  rs.declare({sym::H, 2, Symmetry::Symplectic});
  rs.declare({sym::Hplus, 2, Symmetry::Orthogonal});
  rs.add_pair({"hyperbolic tensor", sym::H, sym::H, 2 * cls(sym::Hplus)});
  return rs;
}

FormalClass mu_class(int n, int i, int j) {
  const RelationSet rs = mu_relations(n);
  const auto u = cls(universal_symbol(n));
  return rs.expand(boxtimes(u + Int(i - n) * cls(sym::H), u + Int(j - n) * cls(sym::H)));
}

// ---------------------------------------------------------------- tensor rule

nlohmann::json TensorRuleValidation::to_json() const {
  return {{"isometry_ok", isometry_ok},
          {"invariants_ok", invariants_ok},
          {"gram_convention", gram_convention},
          {"gram", gram},
          {"isometry", isometry}};
}

TensorRuleValidation validate_hyperbolic_tensor_rule() {
  const forms::RationalField q;
  const Matrix<Rat> j{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
  Matrix<Rat> g(4, 4, Rat(0));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) g(2 * a + b, 2 * c + d) = j(a, c) * j(b, d);
  Matrix<Rat> target(4, 4, Rat(0));
  target(0, 1) = target(1, 0) = target(2, 3) = target(3, 2) = 1;
  // Columns e1, e4, e2, -e3.
  Matrix<Rat> p(4, 4, Rat(0));
  p(0, 0) = 1;
  p(3, 1) = 1;
  p(1, 2) = 1;
  p(2, 3) = -1;
  TensorRuleValidation v;
  v.gram_convention = kTensorConvention;
  v.isometry_ok = forms::is_symmetric(q, g) && forms::congruence(q, p, g) == target && forms::determinant(q, p) != 0;
  auto sorted_classes = [&](const Matrix<Rat>& m) {
    auto d = forms::diagonalize(q, m);
    std::vector<Rat> c = d.classes;
    std::sort(c.begin(), c.end());
    return std::make_pair(c, d.nondegenerate());
  };
  const auto a = sorted_classes(g), b = sorted_classes(target);
  v.invariants_ok = a.second && b.second && a.first == b.first;
  for (const auto* m : {&g, &p}) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < 4; ++r) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < 4; ++c) row.push_back((*m)(r, c).get_str());
      rows.push_back(row);
    }
    (m == &g ? v.gram : v.isometry) = rows;
  }
  return v;
}

}  // namespace bocalc::classcalc
