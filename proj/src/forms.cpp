#include "bocalc/forms.hpp"

#include <functional>

namespace bocalc::forms {

using abelian::FGAbelian;
using abelian::IntMatrix;

Int squarefree_class(const Rat& a) {
  if (sgn(a) == 0) throw ParameterError("square class of zero");
  // a = n/d lies in the class of n·d.
  Int m = abs(a.get_num() * a.get_den());
  Int out(1);
  for (Int p(2); p * p <= m; ++p) {
    int e = 0;
    while (divides(p, m)) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  out *= m;
  return sgn(a) < 0 ? Int(-out) : out;
}

std::optional<Rat> rational_sqrt(const Rat& a) {
  if (sgn(a) < 0) return std::nullopt;
  const Int& n = a.get_num();
  const Int& d = a.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Rat r(sqrt(n), sqrt(d));
  r.canonicalize();
  return r;
}

HyperbolicWitness hyperbolic_relation_witness() {
  HyperbolicWitness w;
  w.from = Matrix<Rat>{{Rat(2), Rat(0)}, {Rat(0), Rat(-2)}};
  w.to = Matrix<Rat>{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
  w.P = Matrix<Rat>{{Rat(3, 4), Rat(1, 4)}, {Rat(1, 4), Rat(3, 4)}};
  w.ok = congruence(RationalField{}, w.P, w.from) == w.to;
  return w;
}

// ---------------------------------------------------------------- Euclidean rings

Int IntegerRing::inverse(const Int& a) const {
  if (!is_unit(a)) throw ParameterError("not a unit in Z: " + a.get_str());
  return a;
}

std::pair<Int, Int> IntegerRing::divmod(const Int& a, const Int& b) const {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {q, r};
}

namespace {

// a = m·2^s with m odd; returns (m, s).
std::pair<Int, long> split_two(const Rat& a) {
  Int m = a.get_num();
  long s = 0;
  while (sgn(m) != 0 && mpz_even_p(m.get_mpz_t())) {
    m /= 2;
    ++s;
  }
  Int d = a.get_den();
  while (d > 1) {
    d /= 2;
    --s;
  }
  return {m, s};
}

Rat pow2(long s) {
  Rat r(1);
  if (s >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(s));
  else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-s));
  r.canonicalize();
  return r;
}

}  // namespace

bool HalfIntegerRing::contains(const Rat& a) const { return mpz_popcount(a.get_den_mpz_t()) == 1; }

bool HalfIntegerRing::is_unit(const Rat& a) const {
  if (sgn(a) == 0) return false;
  return abs(split_two(a).first) == 1;
}

Rat HalfIntegerRing::inverse(const Rat& a) const {
  if (!is_unit(a)) throw ParameterError("not a unit in Z[1/2]: " + a.get_str());
  return Rat(1) / a;
}

std::pair<Rat, Rat> HalfIntegerRing::divmod(const Rat& a, const Rat& b) const {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  if (!contains(a) || !contains(b)) throw ParameterError("element outside Z[1/2]");
  if (sgn(a) == 0) return {Rat(0), Rat(0)};
  if (is_unit(b)) return {a / b, Rat(0)};
  const auto [ma, s] = split_two(a);
  const auto [mb, t] = split_two(b);
  // Nearest integer to ma/mb.
  Int num = 2 * ma + mb, den = 2 * mb;
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  Int q0;
  mpz_fdiv_q(q0.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rat q = Rat(q0) * pow2(s - t);
  q.canonicalize();
  Rat r = a - q * b;
  r.canonicalize();
  return {q, r};
}

Rat HalfIntegerRing::normalize(const Rat& a) const {
  if (sgn(a) == 0) return a;
  return Rat(abs(split_two(a).first));
}

RatPoly RationalPolynomialRing::inverse(const RatPoly& a) const {
  if (!is_unit(a)) throw ParameterError("not a unit in Q[x]: " + to_string(a));
  return RatPoly(Rat(1) / a.constant_term(), 1);
}

std::pair<RatPoly, RatPoly> RationalPolynomialRing::divmod(const RatPoly& a, const RatPoly& b) const {
  RatPoly a1 = a.embed(1, 0), b1 = b.embed(1, 0);
  return divmod_univariate(a1, b1);
}

RatPoly RationalPolynomialRing::normalize(const RatPoly& a) const {
  if (a.is_zero()) return a;
  return a * Rat(Rat(1) / a.leading().second);
}

std::string to_string(SpGenerator g) {
  switch (g) {
    case SpGenerator::Upper: return "upper";
    case SpGenerator::Lower: return "lower";
    case SpGenerator::CrossLower: return "cross-lower";
    case SpGenerator::CrossUpper: return "cross-upper";
    case SpGenerator::Shear: return "shear";
  }
  return "?";
}

// ---------------------------------------------------------------- descriptors

std::string EuclideanDescriptor::name() const {
  switch (kind) {
    case EuclideanKind::Integers: return "Z";
    case EuclideanKind::IntegersTwoInverted: return "Z[1/2]";
    case EuclideanKind::FiniteField: return "F_" + std::to_string(q);
    case EuclideanKind::RationalPolynomials: return "Q[x]";
    case EuclideanKind::FiniteFieldPolynomials: return "F_" + std::to_string(q) + "[x]";
  }
  return "?";
}

EuclideanDescriptor EuclideanDescriptor::parse(const std::string& s) {
  EuclideanDescriptor d;
  if (s == "Z") return d;
  if (s == "Z[1/2]") {
    d.kind = EuclideanKind::IntegersTwoInverted;
    return d;
  }
  if (s == "Q[x]") {
    d.kind = EuclideanKind::RationalPolynomials;
    return d;
  }
  if (s.rfind("F_", 0) == 0) {
    std::string rest = s.substr(2);
    d.kind = EuclideanKind::FiniteField;
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "[x]") {
      rest = rest.substr(0, rest.size() - 3);
      d.kind = EuclideanKind::FiniteFieldPolynomials;
    }
    try {
      std::size_t used = 0;
      d.q = std::stol(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(rest);
    } catch (const std::exception&) {
      throw PresentationError("unknown ring '" + s + "'");
    }
    FiniteField check(d.q);
    return d;
  }
  throw PresentationError("unknown ring '" + s + "'");
}

UnitGroup unit_group(const EuclideanDescriptor& r) {
  UnitGroup u;
  switch (r.kind) {
    case EuclideanKind::Integers:
      u.generators = {"-1"};
      u.orders = {Int(2)};
      break;
    case EuclideanKind::IntegersTwoInverted:
      u.generators = {"-1", "2"};
      u.orders = {Int(2), Int(0)};
      break;
    case EuclideanKind::FiniteField:
    case EuclideanKind::FiniteFieldPolynomials: {
      const FiniteField f(r.q);
      u.generators = {f.to_string(f.generator())};
      u.orders = {Int(r.q - 1)};
      u.note = "cyclic of order " + std::to_string(r.q - 1);
      break;
    }
    case EuclideanKind::RationalPolynomials:
      u.finitely_generated = false;
      u.note = "Q^× = {±1} × free abelian on the primes; not finitely generated";
      break;
  }
  return u;
}

namespace {

FGAbelian direct_sum(const FGAbelian& a, const FGAbelian& b) {
  const std::size_t g = a.generators() + b.generators();
  IntMatrix rel(g, a.relations().cols() + b.relations().cols(), Int(0));
  rel.set_block(0, 0, a.relations());
  rel.set_block(a.generators(), a.relations().cols(), b.relations());
  return FGAbelian(g, rel);
}

// Value of ∏ gen_i^{e_i} as a printable ring element.
std::string unit_product(const EuclideanDescriptor& r, const std::vector<int>& e) {
  switch (r.kind) {
    case EuclideanKind::Integers:
    case EuclideanKind::IntegersTwoInverted: {
      Int v(1);
      if (!e.empty() && e[0]) v = -v;
      if (e.size() > 1 && e[1]) v *= 2;
      return v.get_str();
    }
    case EuclideanKind::FiniteField:
    case EuclideanKind::FiniteFieldPolynomials: {
      const FiniteField f(r.q);
      return f.to_string(f.pow(f.generator(), e.empty() ? 0 : e[0]));
    }
    case EuclideanKind::RationalPolynomials: break;
  }
  return "?";
}

}  // namespace

std::optional<Int> SquareClasses::order() const {
  if (!finite) return std::nullopt;
  return group.order();
}

nlohmann::json SquareClasses::to_json() const {
  nlohmann::json j{{"finite", finite}, {"representatives", representatives}, {"note", note}};
  if (finite) {
    j["order"] = order()->get_str();
    j["structure"] = group.to_string();
  }
  return j;
}

SquareClasses unit_square_classes(const EuclideanDescriptor& r) {
  const UnitGroup u = unit_group(r);
  SquareClasses sc;
  if (!u.finitely_generated) {
    sc.finite = false;
    sc.note = "infinite: " + u.note;
    return sc;
  }
  const std::size_t g = u.generators.size();
  IntMatrix rel(g, 2 * g, Int(0));
  for (std::size_t i = 0; i < g; ++i) {
    rel(i, i) = u.orders[i];
    rel(i, g + i) = 2;
  }
  sc.group = FGAbelian(g, rel);
  sc.finite = sc.group.is_finite();
  // Representatives: 0/1 exponent vectors, first generator varying fastest.
  std::vector<std::vector<Int>> kept;
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    std::vector<Int> v(g);
    std::vector<int> e(g);
    for (std::size_t i = 0; i < g; ++i) {
      e[i] = (mask >> i) & 1u;
      v[i] = e[i];
    }
    bool fresh = true;
    for (const auto& k : kept) {
      std::vector<Int> d(g);
      for (std::size_t i = 0; i < g; ++i) d[i] = v[i] - k[i];
      if (sc.group.is_zero_vector(d)) {
        fresh = false;
        break;
      }
    }
    if (!fresh) continue;
    kept.push_back(v);
    sc.representatives.push_back(unit_product(r, e));
  }
  sc.note = "R^×/R^×2 from unit generators " + [&] {
    std::string s;
    for (std::size_t i = 0; i < g; ++i) s += (i ? ", " : "") + u.generators[i];
    return s;
  }();
  return sc;
}

std::optional<Int> KO1Result::order() const {
  if (!finite) return std::nullopt;
  return group.order();
}

nlohmann::json KO1Result::to_json() const {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : witnesses)
    ws.push_back({{"label", w.label}, {"matrix", w.matrix}, {"determinant", w.determinant}, {"preserves_form", w.preserves_form}});
  nlohmann::json j{{"ring", ring.name()},
                   {"square_classes", square_classes.to_json()},
                   {"finite", finite},
                   {"witnesses", ws},
                   {"form", "q(x1,x2) = x1 x2"}};
  if (finite) {
    j["order"] = order()->get_str();
    j["structure"] = group.to_string();
  }
  return j;
}

namespace {

template <class F>
IsometryWitness make_witness(const F& f, const std::string& label, const Matrix<typename F::Elem>& m) {
  const auto h = Matrix<typename F::Elem>{{f.zero(), f.one()}, {f.one(), f.zero()}};
  IsometryWitness w;
  w.label = label;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < 2; ++j) row.push_back(f.to_string(m(i, j)));
    w.matrix.push_back(row);
  }
  w.determinant = f.to_string(determinant(f, m));
  w.preserves_form = same_matrix(f, congruence(f, m, h), h);
  return w;
}

}  // namespace

KO1Result ko1_euclidean(const EuclideanDescriptor& r) {
  if (!r.two_invertible()) throw ParameterError("2 not invertible");
  KO1Result out;
  out.ring = r;
  out.square_classes = unit_square_classes(r);
  out.finite = out.square_classes.finite;
  if (out.finite) out.group = direct_sum(FGAbelian::from_orders({Int(2)}), out.square_classes.group);

  const UnitGroup u = unit_group(r);
  if (r.kind == EuclideanKind::FiniteField || r.kind == EuclideanKind::FiniteFieldPolynomials) {
    const FiniteFieldOps f(r.q);
    out.witnesses.push_back(make_witness(f, "switch", Matrix<int>{{0, 1}, {1, 0}}));
    const int b = f.field->generator();
    out.witnesses.push_back(
        make_witness(f, "diag(b,b^-1), b = " + f.to_string(b), Matrix<int>{{b, 0}, {0, f.field->inv(b)}}));
  } else {
    const RationalField f;
    out.witnesses.push_back(make_witness(f, "switch", Matrix<Rat>{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}));
    std::vector<Rat> units;
    if (u.finitely_generated) {
      for (const auto& s : u.generators) units.push_back(parse_rat(s));
    } else {
      units = {Rat(-1), Rat(2)};  // sample classes
    }
    for (const auto& b : units)
      out.witnesses.push_back(make_witness(f, "diag(b,b^-1), b = " + b.get_str(),
                                           Matrix<Rat>{{b, Rat(0)}, {Rat(0), Rat(Rat(1) / b)}}));
  }
  return out;
}

// ---------------------------------------------------------------- Karoubi

bool KaroubiReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::optional<std::string> KaroubiReport::first_violation() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name;
  return std::nullopt;
}

nlohmann::json KaroubiReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  nlohmann::json j{{"pass", pass()}, {"checks", cs}};
  j["violation"] = first_violation() ? nlohmann::json(*first_violation()) : nlohmann::json(nullptr);
  if (square_classes) j["square_classes"] = square_classes->to_string();
  if (ko1) {
    j["KO1"] = ko1->to_string();
    if (auto o = ko1->order()) j["KO1_order"] = o->get_str();
  }
  return j;
}

namespace {

FGAbelian group_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw PresentationError(where + ": expected an array of cyclic orders");
  std::vector<Int> orders;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& x = j[i];
    const std::string p = where + "/" + std::to_string(i);
    if (x.is_number_integer() && x.get<long>() >= 0) orders.emplace_back(x.get<long>());
    else throw PresentationError(p + ": expected a nonnegative integer (0 stands for Z)");
  }
  return FGAbelian::from_orders(orders);
}

}  // namespace

KaroubiReport karoubi_check(const nlohmann::json& table) {
  if (!table.is_object()) throw PresentationError("/: expected an object");
  if (!table.contains("groups") || !table["groups"].is_object()) throw PresentationError("/groups: missing object");
  if (!table.contains("maps") || !table["maps"].is_object()) throw PresentationError("/maps: missing object");
  std::map<std::string, FGAbelian> g;
  for (const std::string name : {"K0", "K1", "GW+", "GW-", "V", "W2", "W3"}) {
    if (!table["groups"].contains(name)) throw PresentationError("/groups/" + name + ": missing");
    g[name] = group_from_json(table["groups"][name], "/groups/" + name);
  }
  struct MapSpec {
    std::string name, from, to;
  };
  const std::vector<MapSpec> specs{{"forgetful", "GW-", "K0"},
                                   {"hyperbolic", "K0", "GW+"},
                                   {"K1_to_V", "K1", "V"},
                                   {"V_to_K1", "V", "K1"}};
  std::map<std::string, IntMatrix> m;
  for (const auto& s : specs) {
    if (!table["maps"].contains(s.name)) throw PresentationError("/maps/" + s.name + ": missing");
    IntMatrix a = abelian::int_matrix_from_json(table["maps"][s.name], "/maps/" + s.name);
    if (a.rows() == 0) a = IntMatrix(g[s.to].generators(), g[s.from].generators(), Int(0));
    m[s.name] = a;
  }

  KaroubiReport rep;
  {
    NamedCheck c{"well-defined maps", true, ""};
    for (const auto& s : specs) {
      const auto& a = m[s.name];
      if (a.rows() != g[s.to].generators() || a.cols() != g[s.from].generators()) {
        c.ok = false;
        c.detail = s.name + ": matrix shape does not match " + s.from + " → " + s.to;
        break;
      }
      if (!abelian::is_well_defined(a, g[s.from], g[s.to])) {
        c.ok = false;
        c.detail = s.name + ": relations of " + s.from + " are not sent to zero";
        break;
      }
    }
    rep.checks.push_back(c);
    if (!c.ok) return rep;
  }
  {
    NamedCheck c{"W^i vanishing", g["W2"].is_trivial() && g["W3"].is_trivial(), ""};
    c.detail = "W2 = " + g["W2"].to_string() + ", W3 = " + g["W3"].to_string();
    rep.checks.push_back(c);
  }
  {
    const auto& f = m["forgetful"];
    const bool shapes = g["GW-"].isomorphic(FGAbelian::from_orders({Int(0)})) &&
                        g["K0"].isomorphic(FGAbelian::from_orders({Int(0)}));
    const bool inj = abelian::is_injective(f, g["GW-"], g["K0"]);
    const FGAbelian coker = abelian::cokernel(f, g["K0"]);
    const bool index2 = coker.isomorphic(FGAbelian::from_orders({Int(2)}));
    NamedCheck c{"2Z ⊂ Z", shapes && inj && index2, ""};
    c.detail = "GW- = " + g["GW-"].to_string() + ", K0 = " + g["K0"].to_string() +
               ", injective = " + (inj ? "yes" : "no") + ", cokernel = " + coker.to_string();
    rep.checks.push_back(c);
  }
  {
    const bool inj = abelian::is_injective(m["hyperbolic"], g["K0"], g["GW+"]);
    rep.checks.push_back({"hyperbolic injective", inj, inj ? "" : "K0 → GW+ has a kernel"});
  }
  {
    const bool sur = abelian::is_surjective(m["K1_to_V"], g["V"]);
    rep.checks.push_back({"K1 → V surjective", sur, sur ? "" : "cokernel " + abelian::cokernel(m["K1_to_V"], g["V"]).to_string()});
  }
  const IntMatrix composite = m["V_to_K1"] * m["K1_to_V"];
  {
    NamedCheck c{"squaring composite", true, "K1 → V → K1 is [x] ↦ [x^2]"};
    const std::size_t n = g["K1"].generators();
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Int> d = composite.column(j);
      d[j] -= 2;
      if (!g["K1"].is_zero_vector(d)) {
        c.ok = false;
        c.detail = "generator " + std::to_string(j) + " is not sent to twice itself";
        break;
      }
    }
    rep.checks.push_back(c);
  }
  rep.square_classes = abelian::cokernel(composite, g["K1"]);
  rep.ko1 = direct_sum(FGAbelian::from_orders({Int(2)}), *rep.square_classes);
  if (table["groups"].contains("KO1")) {
    const FGAbelian given = group_from_json(table["groups"]["KO1"], "/groups/KO1");
    const bool same = given.isomorphic(*rep.ko1);
    rep.checks.push_back({"KO1 shape", same, "given " + given.to_string() + ", derived " + rep.ko1->to_string()});
  }
  if (table.contains("ring")) {
    if (!table["ring"].is_string()) throw PresentationError("/ring: expected a string");
    const auto desc = EuclideanDescriptor::parse(table["ring"].get<std::string>());
    const KO1Result k = ko1_euclidean(desc);
    const bool same = k.finite && k.square_classes.group.isomorphic(*rep.square_classes) && k.group.isomorphic(*rep.ko1);
    rep.checks.push_back({"agrees with ko1_euclidean", same,
                          "ko1_euclidean(" + desc.name() + ") = " + (k.finite ? k.group.to_string() : "infinite")});
  }
  return rep;
}

nlohmann::json karoubi_sample_table() {
  // Z[1/2]: K1 = units = Z/2 (sign) ⊕ Z (powers of 2); V receives K1 by the
  // identity and maps back by doubling.
  return nlohmann::json::parse(R"({
    "ring": "Z[1/2]",
    "groups": {
      "K0": [0], "K1": [2, 0], "GW+": [0, 0], "GW-": [0], "V": [2, 0],
      "W2": [], "W3": [], "KO1": [2, 2, 2]
    },
    "maps": {
      "forgetful": [[2]],
      "hyperbolic": [[1], [1]],
      "K1_to_V": [[1, 0], [0, 1]],
      "V_to_K1": [[2, 0], [0, 2]]
    }
  })");
}

}  // namespace bocalc::forms
