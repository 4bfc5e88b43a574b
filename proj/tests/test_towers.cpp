#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bocalc/towers.hpp"

using namespace bocalc;
using namespace bocalc::towers;

namespace {

FGAbelian z() { return FGAbelian::from_orders({Int(0)}); }
FGAbelian cyclic(long n) { return FGAbelian::from_orders({Int(n)}); }
IntMatrix m1(long a) { return IntMatrix{{Int(a)}}; }

Tower repeating(const FGAbelian& a, const IntMatrix& f) { return Tower({a}, {f}, TailPolicy::TemplateRepeating); }

}  // namespace

TEST_CASE("towers: constant tower") {
  const Tower t({z()}, {}, TailPolicy::EventuallyConstant);
  const auto r = check_mittag_leffler(t, 3);
  CHECK(r.status == MLStatus::Certificate);
  CHECK(r.to_json()["lim1"] == "0");
  const auto lim = lim_of_surjective(t, 5);
  CHECK(lim.group.to_string() == "Z");
  CHECK(lim.lim1.valid);
  const auto e = milnor_assemble(t, certificate_from(r), {{Int(7)}, {Int(7)}, {Int(7)}});
  CHECK(e.components.back() == std::vector<Int>{Int(7)});
  CHECK(check_mittag_leffler(repeating(z(), m1(1)), 3).status == MLStatus::Certificate);
}

TEST_CASE("towers: multiplication by two") {
  const Tower t = repeating(z(), m1(2));
  const auto r = check_mittag_leffler(t, 6);
  CHECK(r.status == MLStatus::Refutation);
  REQUIRE(r.failing_level.has_value());
  CHECK(*r.failing_level == 0);
  // χ(x) = x − 2.
  CHECK(r.unit_test_value == Rat(-2));
  CHECK(r.chains[0].images[3] == "⟨(8)⟩");
  CHECK(!r.chains[0].stable_at);
  CHECK(r.to_json()["lim1"] == "nonzero");
  CHECK_THROWS_AS(lim_of_surjective(t, 2), ParameterError);
  CHECK_THROWS_AS(milnor_assemble(t, certificate_from(r), {{Int(0)}}), ParameterError);
}

TEST_CASE("towers: finite groups always certify") {
  std::mt19937 rng(3);
  for (long a : {0L, 1L, 2L, 3L, 5L, 7L}) CHECK(check_mittag_leffler(repeating(cyclic(8), m1(a)), 2).status == MLStatus::Certificate);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> order(2, 12), entry(-5, 5);
    const long n1 = order(rng), n2 = order(rng);
    const FGAbelian a = FGAbelian::from_orders({Int(n1)});
    const FGAbelian b = FGAbelian::from_orders({Int(n2)});
    // f: Z/n2 → Z/n1 by x ↦ c·x needs n1 | c·n2; choose c a multiple of n1/gcd.
    const long g1 = std::gcd(n1, n2);
    const long c1 = (n1 / g1) * entry(rng), c2 = (n2 / g1) * entry(rng);
    const Tower t({a, b}, {m1(c1), m1(c2)}, TailPolicy::TemplateRepeating);
    CHECK(check_mittag_leffler(t, 1).status == MLStatus::Certificate);
  }
}

TEST_CASE("towers: diagonal endomorphisms against the unit oracle") {
  // diag(a,b) on Z^2 satisfies Mittag-Leffler iff a, b ∈ {−1, 0, 1}.
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      const IntMatrix g{{Int(a), Int(0)}, {Int(0), Int(b)}};
      const auto r = check_mittag_leffler(repeating(FGAbelian::from_orders({Int(0), Int(0)}), g), 4);
      const bool ml = std::abs(a) <= 1 && std::abs(b) <= 1;
      INFO("a=" << a << " b=" << b);
      CHECK(r.status == (ml ? MLStatus::Certificate : MLStatus::Refutation));
      if (!ml) {
        for (std::size_t j = 0; j + 1 < r.chains[0].images.size(); ++j)
          CHECK(r.chains[0].images[j] != r.chains[0].images[j + 1]);
      }
    }
}

TEST_CASE("towers: forced stabilization beyond the window") {
  IntMatrix shift(3, 3);
  shift(0, 1) = 1;
  shift(1, 2) = 1;
  const Tower t = repeating(FGAbelian::from_orders({Int(0), Int(0), Int(0)}), shift);
  const auto narrow = check_mittag_leffler(t, 1);
  CHECK(narrow.status == MLStatus::Certificate);
  CHECK(!narrow.chains[0].stable_at);
  const auto wide = check_mittag_leffler(t, 5);
  CHECK(wide.status == MLStatus::Certificate);
  REQUIRE(wide.chains[0].stable_at.has_value());
  CHECK(*wide.chains[0].stable_at == 3);
  // Mixed: Z ⊕ Z/4 with x ↦ 3x on Z is refuted by the free part.
  const IntMatrix g{{Int(3), Int(0)}, {Int(0), Int(1)}};
  CHECK(check_mittag_leffler(repeating(FGAbelian::from_orders({Int(0), Int(4)}), g), 3).status == MLStatus::Refutation);
  CHECK(check_mittag_leffler(repeating(FGAbelian::from_orders({Int(0), Int(4)}), IntMatrix{{Int(1), Int(0)}, {Int(0), Int(2)}}), 3).status ==
        MLStatus::Certificate);
}

TEST_CASE("towers: finite prefixes are inconclusive") {
  const Tower t({z(), z()}, {m1(2)}, TailPolicy::FinitePrefixOnly);
  CHECK(check_mittag_leffler(t, 3).status == MLStatus::Inconclusive);
  CHECK_THROWS_AS(t.level(2), ParameterError);
  CHECK_THROWS_AS(check_mittag_leffler(t, 0), ParameterError);
}

TEST_CASE("towers: ill-formed towers") {
  CHECK_THROWS_AS(Tower({z(), z()}, {IntMatrix{{Int(1), Int(1)}}}, TailPolicy::FinitePrefixOnly), PresentationError);
  CHECK_THROWS_AS(Tower({z(), cyclic(2)}, {m1(1)}, TailPolicy::FinitePrefixOnly), PresentationError);
  CHECK_THROWS_AS(Tower({z()}, {}, TailPolicy::TemplateRepeating), PresentationError);
  CHECK_THROWS_AS(Tower::from_json(nlohmann::json::parse(R"({"levels":[[[0]]],"maps":[],"tail":{"policy":"sometimes"}})")),
                  PresentationError);
}

TEST_CASE("towers: json round trip") {
  const auto j = nlohmann::json::parse(R"({"levels":[[[0]]],"maps":[[[2]]],"tail":{"policy":"template-repeating"}})");
  const Tower t = Tower::from_json(j);
  CHECK(t.tail() == TailPolicy::TemplateRepeating);
  CHECK(check_mittag_leffler(t, 3).status == MLStatus::Refutation);
  const Tower u = Tower::from_json(t.to_json());
  CHECK(u.map(5) == m1(2));
  const Tower f = Tower::from_json(nlohmann::json::parse(R"({"levels":[{"orders":[8]}],"maps":[[[3]]],"tail":"template-repeating"})"));
  CHECK(f.level(4).to_string() == "Z/8");
}

TEST_CASE("towers: surjective Schur towers") {
  const Tower t = schur_tower(2, 4, 3, grass::RestrictionKind::Alpha);
  for (std::size_t d = 0; d <= 3; ++d) {
    const auto lim = lim_of_surjective(t, d);
    CHECK(lim.group.free_rank() == static_cast<std::size_t>(binomial(4 + static_cast<long>(d), 2).get_si()));
    CHECK(lim.group.is_free());
    if (d > 0) {
      CHECK(abelian::is_surjective(lim.projection, lim_of_surjective(t, d - 1).group));
      CHECK(lim.projection == t.map(d - 1));
    }
  }
  // A zero map inserted at level 1.
  const Tower bad({z(), z(), z()}, {m1(1), m1(0)}, TailPolicy::EventuallyConstant);
  try {
    lim_of_surjective(bad, 2);
    FAIL("expected an error");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("level 1") != std::string::npos);
  }
}

TEST_CASE("towers: assembling p1 along the Pontryagin tower") {
  const int w = 4;
  const Tower t = schur_tower(1, 2, static_cast<std::size_t>(w), grass::RestrictionKind::Alpha);
  const auto ring = grass::PowerSeriesRing::limit_ring(1, w, CoeffRing::Integers);
  const IntPoly p1 = IntPoly::variable(1, 0);
  std::vector<std::vector<Int>> elems;
  for (int k = 0; k <= w; ++k) {
    const auto level = grass::GrassRing::present(1, 2 + k);
    elems.push_back(level.coordinates(ring.project(p1, level)));
  }
  const auto cert = lim_of_surjective(t, static_cast<std::size_t>(w)).lim1;
  const auto e = milnor_assemble(t, cert, elems);
  CHECK(e.depth == static_cast<std::size_t>(w));
  // p1 is the coordinate of s_(1) at every level.
  for (const auto& c : e.components) {
    CHECK(c[1] == 1);
    CHECK(std::count(c.begin(), c.end(), Int(0)) == static_cast<long>(c.size()) - 1);
  }
  auto broken = elems;
  broken[2][0] += 1;
  try {
    milnor_assemble(t, cert, broken);
    FAIL("expected an error");
  } catch (const ParameterError& err) {
    CHECK(std::string(err.what()).find("level 1") != std::string::npos);
  }
  CHECK_THROWS_AS(milnor_assemble(t, Lim1Certificate{}, elems), ParameterError);
}
