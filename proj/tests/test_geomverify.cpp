#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "bocalc/geomverify.hpp"

using namespace bocalc;
using namespace bocalc::geom;

namespace {

using Mat4 = std::array<std::array<Rat, 4>, 4>;

// M(t) entries written out directly at a rational point.
Mat4 m_at(const Rat& t) {
  const Rat a = 1 - t * t, b = 2 * t - t * t * t;
  Mat4 m{};
  for (auto& r : m)
    for (auto& x : r) x = 0;
  m[0][0] = a;
  m[0][2] = -t;
  m[1][1] = a;
  m[1][3] = -b;
  m[2][0] = b;
  m[2][2] = a;
  m[3][1] = t;
  m[3][3] = a;
  return m;
}

// Leibniz expansion over all 24 permutations.
Rat det4(const Mat4& m) {
  std::array<int, 4> p{0, 1, 2, 3};
  Rat total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    Rat term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < 4; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Rank of a rational matrix by plain elimination.
std::size_t rank_of(std::vector<std::vector<Rat>> a) {
  std::size_t r = 0;
  const std::size_t n = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Rat f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// Dimension of {B : M(t)ᵀBM(t) = B at t = 0..samples−1}, with an optional
// symmetry constraint B = s·Bᵀ.
std::size_t sampled_invariant_dimension(int samples, int s) {
  std::vector<std::vector<Rat>> rows;
  for (int k = 0; k < samples; ++k) {
    const Mat4 m = m_at(Rat(k));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::vector<Rat> row(16, Rat(0));
        for (int p = 0; p < 4; ++p)
          for (int q = 0; q < 4; ++q) row[p * 4 + q] += m[p][i] * m[q][j];
        row[i * 4 + j] -= 1;
        rows.push_back(row);
      }
  }
  if (s != 0)
    for (int p = 0; p < 4; ++p)
      for (int q = p; q < 4; ++q) {
        std::vector<Rat> row(16, Rat(0));
        row[p * 4 + q] += 1;
        row[q * 4 + p] -= s;
        rows.push_back(row);
      }
  return 16 - rank_of(rows);
}

bool invariant_at_samples(const RatMatrix& b) {
  for (int k = -3; k <= 3; ++k) {
    Rat tv(k, 2);
    tv.canonicalize();
    const Mat4 m = m_at(tv);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Rat v = 0;
        for (int p = 0; p < 4; ++p)
          for (int q = 0; q < 4; ++q) v += m[p][i] * b(p, q) * m[q][j];
        if (v != b(i, j)) return false;
      }
  }
  return true;
}

LinearForm form(std::initializer_list<long> xs) {
  LinearForm f;
  for (long x : xs) f.push_back(RPoly(Rat(x), 1));
  return f;
}

}  // namespace

TEST_CASE("geom: the path M(t)") {
  const PolyMatrix m = m_path();
  for (int k = -4; k <= 4; ++k) {
    Rat tv(k, 3);
    tv.canonicalize();
    const Mat4 ref = m_at(tv);
    const PolyMatrix ev = evaluate_at(m, tv);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(ev(i, j) == RPoly(ref[i][j], 1));
    CHECK(det4(ref) == 1);
  }
  const Mat4 at0 = m_at(Rat(0)), at1 = m_at(Rat(1));
  const long m1_ref[4][4] = {{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(at0[i][j] == (i == j ? 1 : 0));
      CHECK(at1[i][j] == m1_ref[i][j]);
    }
  const Report r = verify_M_path();
  for (const auto& ch : r.checks) {
    INFO(ch.name);
    CHECK(ch.passed);
  }
  CHECK(r.to_json()["ok"] == true);
}

TEST_CASE("geom: invariant forms of M(t)") {
  const InvariantForms f = solve_invariant_forms(m_path());
  // Sampling seven points pins down forms of degree ≤ 6 in t.
  CHECK(f.symmetric.size() == sampled_invariant_dimension(7, 1));
  CHECK(f.skew.size() == sampled_invariant_dimension(7, -1));
  CHECK(f.dimension() == sampled_invariant_dimension(7, 0));
  CHECK(f.symmetric.size() == 1);
  CHECK(f.skew.size() == 3);
  for (const auto& b : f.symmetric) {
    CHECK(b.transpose() == b);
    CHECK(invariant_at_samples(b));
  }
  for (const auto& b : f.skew) {
    CHECK(b.transpose() == -b);
    CHECK(invariant_at_samples(b));
  }
}

TEST_CASE("geom: invariant forms of the identity") {
  const PolyMatrix id = PolyMatrix::identity(4, RPoly(Rat(1), 1), RPoly(Rat(0), 1));
  const InvariantForms f = solve_invariant_forms(id);
  CHECK(f.dimension() == 16);
  CHECK(f.symmetric.size() == 10);
  CHECK(f.skew.size() == 6);
}

TEST_CASE("geom: factorization of M1") {
  const auto fs = m1_factors();
  REQUIRE(fs.size() == 3);
  // Integer product computed directly.
  long prod[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (const auto& f : fs) {
    long next[4][4] = {};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) next[i][j] += prod[i][k] * f(k, j).constant_term().get_num().get_si();
    std::copy(&next[0][0], &next[0][0] + 16, &prod[0][0]);
  }
  const PolyMatrix m1m = m1();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m1m(i, j) == RPoly(Rat(prod[i][j]), 1));
  const Report r = verify_M1_factorization();
  for (const auto& ch : r.checks) {
    INFO(ch.name);
    CHECK(ch.passed);
  }
}

TEST_CASE("geom: quadratic section identity") {
  for (int r = 1; r <= 4; ++r) CHECK(quadratic_section_identity(r));
  CHECK_THROWS_AS(quadratic_section_identity(0), ParameterError);
  CHECK(quadratic_section_report(3).ok());
}

TEST_CASE("geom: symplectic lift") {
  const LiftData d = lift_example();
  CHECK(verify_symplectic_lift(d));
  CHECK(verify_first_order(d));
  const Report r = verify_symplectic_lift_report();
  for (const auto& ch : r.checks) {
    INFO(ch.name);
    CHECK(ch.passed);
  }

  // Without w the identity holds only to first order.
  LiftData no_w = d;
  no_w.w.clear();
  CHECK(!verify_symplectic_lift(no_w));
  CHECK(verify_first_order(no_w));

  LiftData perturbed = d;
  perturbed.v[1][1] += RPoly(Rat(1), 1);
  CHECK(!verify_symplectic_lift(perturbed));
  CHECK(!verify_first_order(perturbed));

  LiftData mismatch = d;
  mismatch.u[0] = form({1, 0, 0});
  CHECK_THROWS_AS(verify_symplectic_lift(mismatch), ParameterError);
  LiftData not_skew = d;
  not_skew.phi(0, 0) = RPoly(Rat(1), 1);
  CHECK_THROWS_AS(verify_symplectic_lift(not_skew), ParameterError);
}

TEST_CASE("geom: wedge coordinates") {
  const PolyMatrix w = wedge(form({1, 0, 0}), form({0, 1, 0}));
  CHECK(w(0, 1) == RPoly(Rat(1), 1));
  CHECK(w(1, 0) == RPoly(Rat(-1), 1));
  CHECK(w.transpose() == -w);
  const auto u = form({1, 2, 3});
  CHECK(wedge(u, u).is_zero());
  const auto v = from_alternating_indexing({form({1, 0, 0}), form({0, 1, 0})});
  CHECK(v[0] == form({0, -1, 0}));
  CHECK(v[1] == form({-1, 0, 0}));
}
