#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bocalc/eps_algebra.hpp"
#include "bocalc/grassring.hpp"
#include "oracles.hpp"

using namespace bocalc;
using namespace bocalc::grass;

namespace {

SymPoly p(int i, int r) { return symfun::elementary(i, r); }

IntPoly random_sym(std::mt19937& rng, int r, int max_weight) {
  std::uniform_int_distribution<int> coef(-3, 3);
  IntPoly out(static_cast<std::size_t>(r));
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& m : oracle::weighted_monomials(r, w))
      if (rng() % 3 == 0) out.add_term(m, Int(coef(rng)));
  return out;
}

// Coordinates of a polynomial over the monomials of weight w.
std::vector<Rat> coords_in(const IntPoly& x, const std::vector<Exponents>& monos) {
  std::vector<Rat> v(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) v[i] = Rat(x.coeff(monos[i]));
  return v;
}

}  // namespace

TEST_CASE("present examples") {
  auto a = GrassRing::present(1, 2);
  REQUIRE(a.ideal_generators().size() == 1);
  CHECK(a.ideal_generators()[0] == p(1, 1).pow(2));
  CHECK(a.basis() == std::vector<Partition>{Partition(), Partition({1})});

  auto b = GrassRing::present(1, 3);
  CHECK(b.ideal_generators()[0] == p(1, 1).pow(3));
  CHECK(b.rank() == 3);

  auto c = GrassRing::present(2, 4);
  CHECK(c.rank() == 6);
  REQUIRE(c.ideal_generators().size() == 2);
  CHECK(c.ideal_generators()[0] == p(1, 2).pow(3) - Int(2) * p(1, 2) * p(2, 2));
  CHECK(c.ideal_generators()[1] == p(1, 2).pow(4) - Int(3) * p(1, 2).pow(2) * p(2, 2) + p(2, 2).pow(2));

  for (int n = 2; n <= 7; ++n) {
    auto g = GrassRing::present(1, n);
    CHECK(g.ideal_generators()[0] == p(1, 1).pow(static_cast<unsigned>(n)));
  }
}

TEST_CASE("rank is binomial") {
  for (int n = 0; n <= 7; ++n)
    for (int r = 0; r <= n; ++r)
      CHECK(Int(static_cast<long>(GrassRing::present(r, n).rank())) == binomial(n, r));
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_WITH_AS(GrassRing::present(3, 2), "r exceeds n", ParameterError);
  CHECK_THROWS_AS(GrassRing::present(-1, 2), ParameterError);
}

TEST_CASE("normal form examples") {
  auto r12 = GrassRing::present(1, 2);
  CHECK(r12.normal_form(IntPoly(Int(1), 1)) == SchurVector<Int>{{Partition(), Int(1)}});
  CHECK(r12.normal_form(p(1, 1) * p(1, 1)).empty());
  auto r13 = GrassRing::present(1, 3);
  CHECK(r13.normal_form(p(1, 1) * p(1, 1)) == SchurVector<Int>{{Partition({2}), Int(1)}});
  auto r24 = GrassRing::present(2, 4);
  // e1^2 = s_(2) + s_(1,1)
  CHECK(r24.normal_form(p(1, 2) * p(1, 2)) ==
        SchurVector<Int>{{Partition({2}), Int(1)}, {Partition({1, 1}), Int(1)}});
}

TEST_CASE("ideal generators reduce to zero") {
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r <= n; ++r) {
      auto g = GrassRing::present(r, n);
      for (const auto& h : g.ideal_generators()) CHECK(g.normal_form(h).empty());
    }
}

TEST_CASE("normal form is reduction modulo the ideal (linear algebra oracle)") {
  std::mt19937 rng(7);
  const std::vector<std::pair<int, int>> cases{{1, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}};
  for (const auto& [r, n] : cases) {
    auto g = GrassRing::present(r, n);
    const auto h = symfun::complete_table(n + 4, r);
    for (int w = 0; w <= n + 3; ++w) {
      const auto monos = oracle::weighted_monomials(r, w);
      std::vector<std::vector<Rat>> ideal_rows;
      for (int k = n - r + 1; k <= std::min(n, w); ++k)
        for (const auto& m : oracle::weighted_monomials(r, w - k))
          ideal_rows.push_back(coords_in(h[static_cast<std::size_t>(k)] * IntPoly::monomial(m, Int(1)), monos));
      const std::size_t ideal_dim = oracle::rank_rat(ideal_rows);
      std::size_t all = 0, boxed = 0;
      for (const auto& lam : oracle::partitions_of(w)) {
        if (lam.length() > r) continue;
        ++all;
        if (g.in_box(lam)) ++boxed;
      }
      CHECK(ideal_dim == all - boxed);
      for (int trial = 0; trial < 3; ++trial) {
        IntPoly x(static_cast<std::size_t>(r));
        for (const auto& m : monos)
          if (rng() % 2) x.add_term(m, Int(static_cast<long>(rng() % 7) - 3));
        const IntPoly diff = x - g.lift(g.normal_form(x));
        auto rows = ideal_rows;
        rows.push_back(coords_in(diff, monos));
        CHECK(oracle::rank_rat(rows) == ideal_dim);
        for (const auto& [lam, c] : g.normal_form(x)) CHECK(g.in_box(lam));
      }
    }
  }
}

TEST_CASE("normal form is a ring homomorphism and idempotent") {
  std::mt19937 rng(11);
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {3, 6}}) {
    auto g = GrassRing::present(r, n);
    for (int t = 0; t < 5; ++t) {
      const IntPoly x = random_sym(rng, r, 4);
      const IntPoly y = random_sym(rng, r, 4);
      const auto nx = g.normal_form(x);
      CHECK(g.normal_form(g.lift(nx)) == nx);
      CHECK(g.normal_form(x * y) == g.multiply(nx, g.normal_form(y)));
      CHECK(g.normal_form(x + y) == g.normal_form(g.lift(nx) + y));
    }
  }
}

TEST_CASE("normal form over GWBase and rationals") {
  auto g = GrassRing::present(1, 3, CoeffRing::GWBase);
  Polynomial<GWElem> x(1);
  x.add_term({1}, GWElem::hyperbolic());
  x.add_term({3}, GWElem::eps());
  x.add_term({0}, GWElem::beta());
  const auto nf = g.normal_form(x);
  CHECK(nf == SchurVector<GWElem>{{Partition(), GWElem::beta()}, {Partition({1}), GWElem::hyperbolic()}});
  auto q = GrassRing::present(2, 4, CoeffRing::Rationals);
  RatPoly y = change_coeffs<Rat>(p(1, 2) * p(2, 2)) * Rat(1, 2);
  CHECK(q.normal_form(y) == SchurVector<Rat>{{Partition({2, 1}), Rat(1, 2)}});
}

TEST_CASE("restriction examples") {
  auto s = GrassRing::present(1, 3);
  auto t = GrassRing::present(1, 2);
  auto m = restriction(s, t, RestrictionKind::Alpha);
  CHECK(m.dense() == Matrix<Int>{{1, 0, 0}, {0, 1, 0}});
  auto id = restriction(s, s, RestrictionKind::Alpha);
  CHECK(id.dense() == Matrix<Int>::identity(3, Int(1), Int(0)));
  auto m25 = restriction(GrassRing::present(2, 5), GrassRing::present(2, 4), RestrictionKind::Alpha);
  CHECK(m25.source_basis.size() == 10);
  CHECK(m25.target_basis.size() == 6);
  std::size_t killed = 0;
  for (std::size_t j = 0; j < m25.source_basis.size(); ++j) {
    bool hit = false;
    for (const auto& [i, jj, v] : m25.entries) hit = hit || jj == j;
    if (!hit) {
      ++killed;
      CHECK(m25.source_basis[j].part(0) == 3);
    }
  }
  CHECK(killed == 4);
  CHECK_THROWS_AS(restriction(GrassRing::present(2, 5), GrassRing::present(1, 5), RestrictionKind::Alpha),
                  ParameterError);
  CHECK_THROWS_AS(restriction(GrassRing::present(2, 5), GrassRing::present(1, 3), RestrictionKind::Beta),
                  ParameterError);
  CHECK_NOTHROW(restriction(GrassRing::present(2, 5), GrassRing::present(1, 4), RestrictionKind::Beta));
  CHECK_THROWS_AS(restriction(GrassRing::present(2, 4), GrassRing::present(2, 5), RestrictionKind::Composite),
                  ParameterError);
}

TEST_CASE("restriction is identity on the box, kills the rest, composes, and is a ring map") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) {
      auto src = GrassRing::present(r, n);
      for (int r2 = 0; r2 <= r; ++r2)
        for (int n2 = r2; n2 <= n; ++n2) {
          if (n2 - r2 > n - r) continue;
          auto tgt = GrassRing::present(r2, n2);
          auto m = restriction(src, tgt, RestrictionKind::Composite);
          for (std::size_t j = 0; j < src.rank(); ++j) {
            SchurVector<Int> v{{src.basis()[j], Int(1)}};
            const auto img = m.apply(v);
            if (tgt.in_box(src.basis()[j])) CHECK(img == v);
            else CHECK(img.empty());
          }
          const IntPoly x = random_sym(rng, r, 5);
          CHECK(tgt.normal_form(restrict_polynomial(x, tgt)) == m.apply(src.normal_form(x)));
        }
    }
  auto a = GrassRing::present(2, 6), b = GrassRing::present(2, 5), c = GrassRing::present(2, 4);
  auto direct = restriction(a, c, RestrictionKind::Alpha);
  auto stepped = compose(restriction(b, c, RestrictionKind::Alpha), restriction(a, b, RestrictionKind::Alpha));
  CHECK(direct.dense() == stepped.dense());
  auto bb = restriction(GrassRing::present(3, 6), GrassRing::present(2, 5), RestrictionKind::Beta);
  for (const auto& [i, j, v] : bb.entries) CHECK(bb.source_basis[j].length() <= 2);
}

TEST_CASE("limit ring bases") {
  auto l1 = PowerSeriesRing::limit_ring(1, 3, CoeffRing::Integers);
  CHECK(l1.basis() == std::vector<Exponents>{{0}, {1}, {2}, {3}});
  auto lc = PowerSeriesRing::limit_ring(std::nullopt, 2, CoeffRing::Integers);
  CHECK(lc.basis() == std::vector<Exponents>{{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  CHECK_THROWS_AS(PowerSeriesRing::limit_ring(1, -1, CoeffRing::Integers), ParameterError);
  // Number of monomials of weight ≤ W in countably many generators is Σ p(w).
  auto l5 = PowerSeriesRing::limit_ring(std::nullopt, 5, CoeffRing::Integers);
  CHECK(l5.basis().size() == 1 + 1 + 2 + 3 + 5 + 7);
  const IntPoly x = IntPoly::variable(1, 0, 2);
  CHECK(l1.multiply(x, x).is_zero());
  CHECK(l1.multiply(x, IntPoly::variable(1, 0)) == IntPoly::variable(1, 0, 3));
}

TEST_CASE("limit ring projections form a cone") {
  std::mt19937 rng(3);
  for (int W = 0; W <= 5; ++W) {
    auto lim = PowerSeriesRing::limit_ring(std::nullopt, W, CoeffRing::Integers);
    const IntPoly x = lim.truncate(random_sym(rng, static_cast<int>(lim.generators()), W));
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r < n; ++r) {
        auto big = GrassRing::present(r, n + 1);
        auto small = GrassRing::present(r, n);
        auto m = restriction(big, small, RestrictionKind::Alpha);
        CHECK(m.apply(lim.project(x, big)) == lim.project(x, small));
      }
    // Once the box holds every partition of weight ≤ W, projection loses nothing.
    auto r1 = PowerSeriesRing::limit_ring(1, W, CoeffRing::Integers);
    const IntPoly y = r1.truncate(random_sym(rng, 1, W));
    auto g = GrassRing::present(1, W + 1);
    CHECK(r1.from_schur(r1.project(y, g)) == y);
  }
}

TEST_CASE("eps algebra examples") {
  EpsAlgebra alg({{"x", {1, 0}}, {"y", {1, 0}}, {"u", {1, 1}}, {"v", {1, 1}}, {"a", {4, 2}}, {"b", {3, 7}}});
  auto g = [&](std::size_t i) { return alg.generator(i); };
  CHECK(alg.product(g(0), g(1)) == alg.scale(GWElem(-1), alg.product(g(1), g(0))));
  CHECK(alg.product(g(2), g(3)) == alg.scale(-GWElem::eps(), alg.product(g(3), g(2))));
  for (std::size_t i = 0; i < alg.size(); ++i)
    CHECK(alg.product(g(4), g(i)) == alg.product(g(i), g(4)));
  CHECK(GWElem::eps() * GWElem::eps() == GWElem(1));
  CHECK(GWElem::beta(1) * GWElem::beta(-1) == GWElem(1));
  // x^2 is 2-torsion: 2x^2 = 0.
  CHECK(alg.scale(GWElem(2), alg.product(g(0), g(0))).is_zero());
  // u^2 = −ε u^2, so (1 + ε)u^2 = 0.
  CHECK(alg.scale(GWElem::hyperbolic(), alg.product(g(2), g(2))).is_zero());
  CHECK(switch_sign({1, 1}, {1, 1}) == -GWElem::eps());
  CHECK(switch_sign({4, 2}, {3, 5}) == GWElem(1));
}

TEST_CASE("eps algebra random axioms") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(0, 5);
  std::vector<EpsAlgebra::Generator> gens;
  for (int i = 0; i < 5; ++i) gens.push_back({"g" + std::to_string(i), {deg(rng), deg(rng)}});
  gens.push_back({"c", {2, 4}});
  EpsAlgebra alg(gens);
  auto random_homog = [&]() {
    Exponents e(alg.size());
    for (auto& x : e) x = static_cast<int>(rng() % 3);
    GWElem c(Int(static_cast<long>(rng() % 5) - 2), Int(static_cast<long>(rng() % 5) - 2),
             static_cast<int>(rng() % 3) - 1);
    return std::make_pair(alg.monomial(e, c), alg.degree(e));
  };
  for (int t = 0; t < 300; ++t) {
    auto [a, da] = random_homog();
    auto [b, db] = random_homog();
    auto [c, dc] = random_homog();
    CHECK(alg.product(alg.product(a, b), c) == alg.product(a, alg.product(b, c)));
    CHECK(alg.product(a, b) == alg.scale(switch_sign(da, db), alg.product(b, a)));
    const auto central = alg.generator(alg.size() - 1);
    CHECK(alg.product(central, a) == alg.product(a, central));
  }
}
