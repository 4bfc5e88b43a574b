#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bocalc/classcalc.hpp"
#include "bocalc/forms.hpp"

using namespace bocalc;
using namespace bocalc::classcalc;

namespace {

FormalClass s(const std::string& name, long k = 1) { return FormalClass::symbol(name, k); }
FormalClass w2(const std::string& a, const std::string& b) { return FormalClass::word(Word{{a, 1}, {b, 1}}); }

// Evaluates a class under the commutative model where a word A⊠B becomes
// value(A)·value'(B) and the one-letter class H+ is h·h'/2. Symbol values are
// supplied for the first and second slot separately.
Rat evaluate(const FormalClass& x, const std::map<std::string, Rat>& first, const std::map<std::string, Rat>& second,
             const std::map<std::string, Rat>& single) {
  Rat total(0);
  for (const auto& [w, c] : x.terms()) {
    Rat v(1);
    if (w.size() == 1) v = single.at(w[0].symbol);
    else if (w.size() == 2) v = first.at(w[0].symbol) * second.at(w[1].symbol);
    for (const auto& f : w) v *= f.multiplicity;
    total += Rat(c) * v;
  }
  return total;
}

Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-50, 50);
  std::uniform_int_distribution<int> e(1, 9);
  Rat r(d(rng), e(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("classes: arithmetic and printing") {
  CHECK(FormalClass().to_string() == "0");
  const auto x = s("A") + s("B") - s("A");
  CHECK(x == s("B"));
  CHECK((2 * s("A")).coeff(Word{{"A", 1}}) == 2);
  CHECK(boxtimes(s("A") - s("B"), s("C")).to_string() == "[A⊠C] - [B⊠C]");
  CHECK(swap(w2("A", "B")) == w2("B", "A"));
  CHECK(distribute(FormalClass::word(Word{{"A", 3}, {"B", 2}})) == 6 * w2("A", "B"));
}

TEST_CASE("classes: expansion examples") {
  const auto rs = gw_relations(2, 0);
  CHECK(rs.expand(s("U_{2n}") + s("U_{2n}^⊥")) == 4 * s(sym::H));
  CHECK(rs.expand(w2(sym::H, sym::H)) == 2 * s(sym::Hplus));
  CHECK(rs.expand(FormalClass()).is_zero());
  CHECK(rs.expand(FormalClass::word(Word{{sym::H, 3}, {sym::H, 1}})) == 6 * s(sym::Hplus));
  CHECK_THROWS_AS(rs.expand(s("W")), ParameterError);
  CHECK_THROWS_AS(rs.expand(FormalClass::word(Word{{"U", 1}, {"U", 1}, {"U", 1}})), ParameterError);
  CHECK_THROWS_AS(gw_relations(0, 0), ParameterError);
  CHECK_THROWS_AS(gw_relations(2, 3), ParameterError);
}

TEST_CASE("classes: rank is preserved along every trace") {
  for (int n = 1; n <= 3; ++n)
    for (int i = -n; i <= n; ++i) {
      const auto rs = gw_relations(n, i);
      std::vector<TraceStep> trace;
      const auto x = s("f*V_{16n}") + w2("U_{2n}^⊥", "U^⊥") - 3 * w2(sym::H, "U_{2n}^⊥");
      const auto y = rs.expand(x, &trace);
      CHECK(!trace.empty());
      for (const auto& st : trace) CHECK(rs.rank(st.after) == st.coeff * rs.rank(st.before));
      CHECK(rs.rank(x) == rs.rank(y));
    }
}

TEST_CASE("classes: GW formula for all small n and i") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int i = -n; i <= n; ++i) {
      const auto cert = verify_gw_formula(n, i);
      INFO("n=" << n << " i=" << i);
      CHECK(cert.ok());
      CHECK(cert.equal);
      CHECK(cert.lhs_rank == 0);
      CHECK(cert.confluence.confluent);
      CHECK(cert.confluence.words_compared > 0);
      CHECK(!cert.confluence.outside_domain.empty());
      for (const auto& a : cert.auxiliary) CHECK_MESSAGE(a.holds, a.name);

      // Independent check in a commutative model.
      const Rat u = random_rat(rng), u1 = random_rat(rng), h = random_rat(rng), h2 = random_rat(rng);
      std::map<std::string, Rat> first{{"U_{2n}", u}, {"U_{2n}^⊥", Rat(2 * n) * h - u}, {sym::H, h}};
      std::map<std::string, Rat> second{{"U", u1}, {"U^⊥", Rat(2) * h2 - u1}, {sym::H, h2}};
      const Rat hp = h * h2 / 2;
      const Rat fv = u * u1 + Rat(n - i) * h * (Rat(2) * h2 - u1) + (Rat(2 * n) * h - u) * h2 + Rat(2 * n + 2 * i) * hp;
      std::map<std::string, Rat> single{{sym::Hplus, hp}, {"f*V_{16n}", fv}};
      const Rat lhs = evaluate(cert.lhs_input, first, second, single);
      const Rat rhs = evaluate(cert.rhs_input, first, second, single);
      CHECK(lhs == rhs);
      CHECK(lhs == (u - Rat(n - i) * h) * (u1 - h2));
      CHECK(evaluate(cert.lhs_normal, first, second, single) == lhs);
    }
}

TEST_CASE("classes: GW normal form by hand") {
  const auto cert = verify_gw_formula(1, 0);
  const auto expected = w2("U_{2n}", "U") - w2("U_{2n}", sym::H) - w2(sym::H, "U") + 2 * s(sym::Hplus);
  CHECK(cert.lhs_normal == expected);
  CHECK(verify_gw_formula(2, -1).ok());
  CHECK(verify_gw_formula(3, 2).ok());
  const auto j = verify_gw_formula(3, 2).to_json();
  CHECK(j["ok"] == true);
  CHECK(j["confluence"]["confluent"] == true);
}

TEST_CASE("classes: K0 formula for all small n and i") {
  std::mt19937 rng(12);
  for (int n = 1; n <= 4; ++n)
    for (int i = -n; i <= n; ++i) {
      const auto cert = verify_k0_formula(n, i);
      INFO("n=" << n << " i=" << i);
      CHECK(cert.ok());
      for (const auto& a : cert.auxiliary) CHECK_MESSAGE(a.holds, a.name);
      CHECK(cert.lhs_normal.coeff(Word{{sym::O, 1}, {sym::O, 1}}) == n - i);

      const Rat u = random_rat(rng), u1 = random_rat(rng), o = random_rat(rng), o2 = random_rat(rng);
      std::map<std::string, Rat> first{{"U'_n", u}, {"U''_n", Rat(2 * n) * o - u}, {sym::O, o}};
      std::map<std::string, Rat> second{{"U'_1", u1}, {"U''_1", Rat(2) * o2 - u1}, {sym::O, o2}};
      const Rat hu = u * u1 + Rat(n - i) * o * (Rat(2) * o2 - u1) + (Rat(2 * n) * o - u) * o2 + Rat(n + i) * o * o2;
      std::map<std::string, Rat> single{{"h*U'_{4n}", hu}};
      CHECK(evaluate(cert.lhs_input, first, second, single) == (u - Rat(n - i) * o) * (u1 - o2));
      CHECK(evaluate(cert.rhs_input, first, second, single) == (u - Rat(n - i) * o) * (u1 - o2));
    }
}

TEST_CASE("classes: rule checks catch wrong ranks and symmetry") {
  RelationSet rs;
  rs.declare({"A", 2, Symmetry::Symplectic});
  rs.declare({"B", 2, Symmetry::Orthogonal});
  rs.add_substitution({"bad rank", "A", 2 * s("B")});
  const auto checks = rs.check_rules();
  REQUIRE(checks.size() == 1);
  CHECK(!checks[0].rank_ok);
  CHECK(!checks[0].symmetry_ok);
  CHECK_THROWS_AS(rs.declare({"C", 3, Symmetry::Symplectic}), ParameterError);
  CHECK(tensor_symmetry(Symmetry::Symplectic, Symmetry::Symplectic) == Symmetry::Orthogonal);
  CHECK(tensor_symmetry(Symmetry::Symplectic, Symmetry::Orthogonal) == Symmetry::Symplectic);
  CHECK(tensor_symmetry(Symmetry::Orthogonal, Symmetry::Plain) == Symmetry::Plain);
}

TEST_CASE("classes: confluence detects disagreeing rules") {
  RelationSet rs;
  rs.declare({"A", 1, Symmetry::Plain});
  rs.declare({"B", 1, Symmetry::Plain});
  rs.declare({"C", 1, Symmetry::Plain});
  rs.add_substitution({"A to B", "A", s("B")});
  rs.add_pair({"AA to C", "A", "A", s("C")});
  const auto rep = rs.check_confluence();
  CHECK(!rep.confluent);
  CHECK(!rep.failures.empty());
}

TEST_CASE("classes: mu classes") {
  const auto u = universal_symbol(1);
  CHECK(mu_class(1, 0, 0) == w2(u, u) - w2(u, sym::H) - w2(sym::H, u) + 2 * s(sym::Hplus));
  for (int n = 1; n <= 3; ++n) {
    const auto rs = mu_relations(n);
    for (int i = -n; i <= n; ++i)
      for (int j = -n; j <= n; ++j) {
        const auto x = mu_class(n, i, j);
        CHECK(rs.rank(x) == 4 * i * j);
        CHECK(rs.expand(swap(x)) == mu_class(n, j, i));
      }
  }
}

TEST_CASE("classes: hyperbolic tensor rule against Gram matrices") {
  const auto v = validate_hyperbolic_tensor_rule();
  CHECK(v.isometry_ok);
  CHECK(v.invariants_ok);
  // Independent: recompute PᵀGP from the reported strings.
  Matrix<Rat> g(4, 4, Rat(0)), p(4, 4, Rat(0));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      g(r, c) = Rat(v.gram[r][c]);
      p(r, c) = Rat(v.isometry[r][c]);
    }
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Rat acc(0);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) acc += p(r, a) * g(r, c) * p(c, b);
      const bool hyper = (a / 2 == b / 2) && a != b;
      CHECK(acc == Rat(hyper ? 1 : 0));
    }
  CHECK(g(0, 3) == 1);
  CHECK(g(1, 2) == -1);
}
