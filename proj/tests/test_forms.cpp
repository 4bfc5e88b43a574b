#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "bocalc/forms.hpp"

using namespace bocalc;
using namespace bocalc::forms;

namespace {

using FqMat = Matrix<int>;

// Brute-force isometry search over a prime field, in plain modular
// arithmetic: columns v_1..v_n of P are chosen one at a time with
// v_iᵀ A v_j = B_ij, and P is checked invertible by row reduction.
bool oracle_isometric(long p, const FqMat& a, const FqMat& b) {
  const std::size_t n = a.rows();
  auto md = [p](long x) { return ((x % p) + p) % p; };
  auto inv = [&](long x) {
    for (long y = 1; y < p; ++y)
      if (md(x * y) == 1) return y;
    return 0L;
  };
  std::vector<std::vector<long>> vecs;
  std::vector<long> cur(n, 0);
  std::function<void(std::size_t)> gen = [&](std::size_t i) {
    if (i == n) {
      vecs.push_back(cur);
      return;
    }
    for (long x = 0; x < p; ++x) {
      cur[i] = x;
      gen(i + 1);
    }
  };
  gen(0);
  // Av for every candidate v.
  std::vector<std::vector<long>> av;
  std::vector<long> self;
  for (const auto& v : vecs) {
    std::vector<long> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += a(i, j) * v[j];
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[i] * w[i];
    av.push_back(w);
    self.push_back(md(s));
  }
  auto independent = [&](std::vector<std::vector<long>> rows) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = rank;
      while (piv < rows.size() && md(rows[piv][c]) == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      const long ip = inv(rows[rank][c]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank || md(rows[i][c]) == 0) continue;
        const long m = md(rows[i][c] * ip);
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = md(rows[i][j] - m * rows[rank][j]);
      }
      ++rank;
    }
    return rank == rows.size();
  };
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == n) return true;
    for (std::size_t idx = 0; idx < vecs.size(); ++idx) {
      if (self[idx] != b(k, k)) continue;
      bool ok = true;
      for (std::size_t j = 0; ok && j < k; ++j) {
        long s = 0;
        for (std::size_t i = 0; i < n; ++i) s += vecs[chosen[j]][i] * av[idx][i];
        ok = md(s) == b(j, k);
      }
      if (!ok) continue;
      chosen.push_back(idx);
      std::vector<std::vector<long>> rows;
      for (auto c : chosen) rows.push_back(vecs[c]);
      if (independent(rows) && search(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(0);
}

FqMat diag_fq(const std::vector<int>& d) {
  FqMat m(d.size(), d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

template <class F>
Matrix<typename F::Elem> random_invertible(const F& f, std::size_t n,
                                           const std::function<typename F::Elem()>& draw) {
  for (;;) {
    auto p = zero_matrix(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = draw();
    if (matrix_rank(f, p) == n) return p;
  }
}

template <class F>
Matrix<typename F::Elem> random_symmetric(const F& f, std::size_t n, const std::function<typename F::Elem()>& draw) {
  auto g = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = draw();
  return g;
}

template <class F>
void check_diagonalization(const F& f, const Matrix<typename F::Elem>& g) {
  const auto d = diagonalize(f, g);
  auto expect = zero_matrix(f, g.rows(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) expect(i, i) = d.diagonal[i];
  CHECK(same_matrix(f, congruence(f, d.P, g), expect));
  CHECK(matrix_rank(f, d.P) == g.rows());
  CHECK(d.radical_dimension == g.rows() - matrix_rank(f, g));
}

Int oracle_gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (sgn(b) != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

RatPoly oracle_poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divmod_univariate(a, b).second;
    a = b;
    b = r;
  }
  return a;
}

template <class R>
void check_reduction(const R& r, const std::vector<typename R::Elem>& v) {
  const auto red = sp_reduce_unimodular(r, v);
  const auto j = standard_symplectic_ring(r, v.size());
  auto w = v;
  for (const auto& f : red.factors) {
    CHECK(f.matrix.transpose() * j * f.matrix == j);
    w = f.matrix.apply(w);
  }
  CHECK(w[0] == r.one());
  for (std::size_t k = 1; k < w.size(); ++k) CHECK(r.is_zero(w[k]));
}

}  // namespace

TEST_CASE("finite field arithmetic") {
  for (long q : {3L, 5L, 7L, 9L, 25L, 27L, 49L}) {
    const FiniteField f(q);
    CHECK(f.p() * 0 + f.q() == q);
    // The generator has order q - 1.
    int x = 1;
    for (long k = 1; k < q - 1; ++k) {
      x = f.mul(x, f.generator());
      CHECK(x != 1);
    }
    CHECK(f.mul(x, f.generator()) == 1);
    for (int a : f.elements()) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.parse(f.to_string(a)) == a);
      for (int b : f.elements()) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (q <= 9)
          for (int c : f.elements()) {
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
          }
      }
    }
  }
  CHECK_THROWS_AS(FiniteField(4), ParameterError);
  CHECK_THROWS_AS(FiniteField(15), ParameterError);
  CHECK_THROWS_AS(FiniteField(1), ParameterError);
}

TEST_CASE("diagonalize: diagonal input is returned unchanged") {
  const RationalField q;
  const Matrix<Rat> g{{Rat(3), Rat(0), Rat(0)}, {Rat(0), Rat(-5), Rat(0)}, {Rat(0), Rat(0), Rat(6)}};
  const auto d = diagonalize(q, g);
  CHECK(d.P == identity_matrix(q, 3));
  CHECK(d.diagonal == std::vector<Rat>{Rat(3), Rat(-5), Rat(6)});
}

TEST_CASE("diagonalize: hyperbolic plane over Q") {
  const RationalField q;
  const Matrix<Rat> g{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  const auto d = diagonalize(q, g);
  CHECK(d.diagonal == std::vector<Rat>{Rat(2), Rat(-2)});
  CHECK(d.P == Matrix<Rat>{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}});
  CHECK(congruence(q, d.P, g) == Matrix<Rat>{{Rat(2), Rat(0)}, {Rat(0), Rat(-2)}});
}

TEST_CASE("diagonalize: square-class representatives and degenerate input") {
  const RationalField q;
  const Matrix<Rat> g{{Rat(8), Rat(0)}, {Rat(0), Rat(-1, 3)}};
  const auto d = diagonalize(q, g);
  CHECK(d.diagonal == std::vector<Rat>{Rat(2), Rat(-3)});
  check_diagonalization(q, g);
  const Matrix<Rat> deg{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  const auto dd = diagonalize(q, deg);
  CHECK(dd.radical_dimension == 1);
  CHECK_FALSE(dd.nondegenerate());
  CHECK_THROWS_AS(diagonalize(q, Matrix<Rat>{{Rat(1), Rat(2)}, {Rat(0), Rat(1)}}), ParameterError);
  CHECK(squarefree_class(Rat(-12)) == -3);
  CHECK(squarefree_class(Rat(5, 20)) == 1);
}

TEST_CASE("diagonalize over Q and R on random forms") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-4, 4);
  const RationalField q;
  const RealClosedField r;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto g = random_symmetric(q, n, [&] { return Rat(d(rng), 1 + rng() % 3); });
    check_diagonalization(q, g);
    check_diagonalization(r, g);
    // Signature survives a random congruence.
    const auto p = random_invertible(r, n, [&] { return Rat(d(rng)); });
    const auto a = form_invariants(r, g), b = form_invariants(r, congruence(r, p, g));
    CHECK(a.positive == b.positive);
    CHECK(a.negative == b.negative);
    CHECK(equivalent(r, g, congruence(r, p, g)));
  }
  const auto d3 = diagonalize(r, Matrix<Rat>{{Rat(3)}});
  CHECK(d3.diagonal[0] == 3);
  CHECK(d3.classes[0] == 1);
}

TEST_CASE("hyperbolic relation over Q") {
  const auto w = hyperbolic_relation_witness();
  CHECK(w.ok);
  const RationalField q;
  CHECK(congruence(q, w.P, w.from) == w.to);
  CHECK(matrix_rank(q, w.P) == 2);
}

TEST_CASE("F_5: <1,1> and <2,3> are isometric") {
  const FiniteFieldOps f(5);
  const FqMat a = diag_fq({1, 1}), b = diag_fq({2, 3});
  CHECK(oracle_isometric(f.field->p(), a, b));
  CHECK(equivalent(f, a, b));
  CHECK_FALSE(oracle_isometric(f.field->p(), a, diag_fq({1, 2})));
  CHECK_FALSE(equivalent(f, a, diag_fq({1, 2})));
}

TEST_CASE("finite fields: rank and discriminant classify forms") {
  std::mt19937 rng(5);
  for (long q : {3L, 5L, 7L}) {
    const FiniteFieldOps f(q);
    const int g = f.field->generator();
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<int> ones(n, 1);
      std::vector<int> twisted = ones;
      twisted.back() = g;
      const FqMat rep_square = diag_fq(ones), rep_twisted = diag_fq(twisted);
      // Exhaustive over all symmetric matrices except the largest case.
      std::vector<FqMat> inputs;
      const bool exhaustive = n <= 2 || q == 3;
      if (exhaustive) {
        const std::size_t slots = n * (n + 1) / 2;
        long total = 1;
        for (std::size_t s = 0; s < slots; ++s) total *= q;
        for (long code = 0; code < total; ++code) {
          FqMat m(n, n, 0);
          long c = code;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
              m(i, j) = m(j, i) = static_cast<int>(c % q);
              c /= q;
            }
          inputs.push_back(m);
        }
      } else {
        for (int t = 0; t < 120; ++t)
          inputs.push_back(random_symmetric(f, n, [&] { return static_cast<int>(rng() % q); }));
      }
      for (const auto& m : inputs) {
        if (matrix_rank(f, m) != n) continue;
        const bool lib_sq = equivalent(f, m, rep_square);
        const bool lib_tw = equivalent(f, m, rep_twisted);
        CHECK(lib_sq != lib_tw);
        CHECK(oracle_isometric(f.field->p(), m, rep_square) == lib_sq);
        CHECK(oracle_isometric(f.field->p(), m, rep_twisted) == lib_tw);
      }
    }
  }
}

TEST_CASE("finite fields: invariants under random congruence") {
  std::mt19937 rng(9);
  for (long q : {3L, 5L, 7L, 9L, 11L, 13L}) {
    const FiniteFieldOps f(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const auto g = random_symmetric(f, n, [&] { return static_cast<int>(rng() % q); });
      check_diagonalization(f, g);
      const auto p = random_invertible(f, n, [&] { return static_cast<int>(rng() % q); });
      const auto h = congruence(f, p, g);
      const auto a = form_invariants(f, g), b = form_invariants(f, h);
      CHECK(a.rank == b.rank);
      CHECK(a.discriminant_class == b.discriminant_class);
      check_diagonalization(f, h);
    }
  }
}

TEST_CASE("symplectic basis") {
  const RationalField q;
  const auto j4 = standard_symplectic(q, 4);
  CHECK(symplectic_basis(q, j4) == identity_matrix(q, 4));
  const Matrix<Rat> g{{Rat(0), Rat(2)}, {Rat(-2), Rat(0)}};
  CHECK(symplectic_basis(q, g) == Matrix<Rat>{{Rat(1), Rat(0)}, {Rat(0), Rat(1, 2)}});
  const Matrix<Rat> odd{{Rat(0), Rat(1), Rat(0)}, {Rat(-1), Rat(0), Rat(1)}, {Rat(0), Rat(-1), Rat(0)}};
  try {
    symplectic_basis(q, odd);
    FAIL("expected an error");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()) == "degenerate skew form");
  }
  const Matrix<Rat> deg{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  CHECK_THROWS_AS(symplectic_basis(q, deg), ParameterError);
  CHECK_THROWS_AS(symplectic_basis(q, Matrix<Rat>{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}), ParameterError);

  std::mt19937 rng(2);
  const FiniteFieldOps f7(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 * (1 + rng() % 3);
    auto gq = zero_matrix(q, n, n);
    auto gf = zero_matrix(f7, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) {
        const long x = static_cast<long>(rng() % 9) - 4;
        gq(i, k) = x;
        gq(k, i) = -x;
        gf(i, k) = f7.from_int(x);
        gf(k, i) = f7.from_int(-x);
      }
    if (matrix_rank(q, gq) == n) CHECK(congruence(q, symplectic_basis(q, gq), gq) == standard_symplectic(q, n));
    if (matrix_rank(f7, gf) == n)
      CHECK(same_matrix(f7, congruence(f7, symplectic_basis(f7, gf), gf), standard_symplectic(f7, n)));
  }
}

TEST_CASE("sp_reduce_unimodular examples") {
  const IntegerRing z;
  CHECK(sp_reduce_unimodular(z, {Int(1), Int(0), Int(0), Int(0)}).factors.empty());
  check_reduction(z, {Int(2), Int(3), Int(0), Int(0)});
  CHECK_FALSE(sp_reduce_unimodular(z, {Int(2), Int(3), Int(0), Int(0)}).factors.empty());
  try {
    sp_reduce_unimodular(z, {Int(2), Int(4), Int(0), Int(0)});
    FAIL("expected NotUnimodular");
  } catch (const NotUnimodular& e) {
    CHECK(e.gcd() == "2");
  }
  CHECK_THROWS_AS(sp_reduce_unimodular(z, {Int(1), Int(0), Int(0)}), ParameterError);
  check_reduction(z, {Int(-1), Int(0), Int(0), Int(0)});
  check_reduction(z, {Int(0), Int(0), Int(0), Int(1)});
  check_reduction(z, {Int(6), Int(10), Int(15), Int(0), Int(0), Int(0)});
  const HalfIntegerRing zh;
  check_reduction(zh, {Rat(3), Rat(5, 2), Rat(0), Rat(0)});
  check_reduction(zh, {Rat(6), Rat(0), Rat(0), Rat(1, 4)});
  CHECK_THROWS_AS(sp_reduce_unimodular(zh, {Rat(3), Rat(9), Rat(0), Rat(0)}), NotUnimodular);
}

TEST_CASE("every elementary generator preserves J") {
  const IntegerRing z;
  for (auto k : {SpGenerator::Upper, SpGenerator::Lower, SpGenerator::CrossLower, SpGenerator::CrossUpper,
                 SpGenerator::Shear}) {
    const auto f = make_sp_factor(z, 3, k, 0, 2, Int(5));
    const auto j = standard_symplectic_ring(z, 6);
    CHECK(f.matrix.transpose() * j * f.matrix == j);
  }
}

TEST_CASE("sp_reduce_unimodular on random vectors over Z and Q[x]") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-30, 30);
  const IntegerRing z;
  for (std::size_t n2 : {4u, 6u}) {
    int done = 0, refused = 0;
    while (done < 100) {
      std::vector<Int> v(n2);
      for (auto& x : v) x = d(rng);
      Int g(0);
      for (const auto& x : v) g = oracle_gcd(g, x);
      if (g == 1) {
        check_reduction(z, v);
        ++done;
      } else if (refused < 20) {
        CHECK_THROWS_AS(sp_reduce_unimodular(z, v), NotUnimodular);
        ++refused;
      }
    }
  }
  const RationalPolynomialRing qx;
  std::uniform_int_distribution<int> c(-3, 3);
  auto random_poly = [&] {
    RatPoly p(1);
    const int deg = static_cast<int>(rng() % 3);
    for (int e = 0; e <= deg; ++e) p.add_term(Exponents{e}, Rat(c(rng)));
    return p;
  };
  for (std::size_t n2 : {4u, 6u}) {
    int done = 0, refused = 0;
    while (done < 100) {
      std::vector<RatPoly> v(n2);
      for (auto& x : v) x = random_poly();
      RatPoly g(1);
      for (const auto& x : v) g = oracle_poly_gcd(g, x);
      const bool unimodular = !g.is_zero() && g.degree() == 0;
      if (unimodular) {
        check_reduction(qx, v);
        ++done;
      } else if (refused < 20) {
        CHECK_THROWS_AS(sp_reduce_unimodular(qx, v), NotUnimodular);
        ++refused;
      }
    }
  }
  // A non-unimodular polynomial vector reports its gcd.
  const RatPoly x = RatPoly::variable(1, 0);
  try {
    sp_reduce_unimodular(qx, {x * x, x, RatPoly(1), RatPoly(1)});
    FAIL("expected NotUnimodular");
  } catch (const NotUnimodular& e) {
    CHECK(e.gcd() == "x");
  }
}

TEST_CASE("unit square classes") {
  const auto z = unit_square_classes(EuclideanDescriptor::parse("Z"));
  CHECK(*z.order() == 2);
  CHECK(z.representatives == std::vector<std::string>{"1", "-1"});
  const auto zh = unit_square_classes(EuclideanDescriptor::parse("Z[1/2]"));
  CHECK(*zh.order() == 4);
  CHECK(zh.representatives == std::vector<std::string>{"1", "-1", "2", "-2"});
  for (long q : {3L, 5L, 7L, 9L, 25L}) {
    const auto f = unit_square_classes(EuclideanDescriptor::parse("F_" + std::to_string(q)));
    CHECK(*f.order() == 2);
    // The non-square representative is really a non-square: count squares.
    const FiniteField ff(q);
    long squares = 0;
    for (int a : ff.elements())
      if (a != 0 && ff.is_square(a)) ++squares;
    CHECK(squares * 2 == q - 1);
    CHECK_FALSE(ff.is_square(ff.parse(f.representatives[1])));
  }
  CHECK(*unit_square_classes(EuclideanDescriptor::parse("F_9[x]")).order() == 2);
  CHECK_FALSE(unit_square_classes(EuclideanDescriptor::parse("Q[x]")).finite);
  CHECK_THROWS_AS(EuclideanDescriptor::parse("F_6"), ParameterError);
  CHECK_THROWS_AS(EuclideanDescriptor::parse("R[y]"), PresentationError);
}

TEST_CASE("KO1 of Euclidean domains") {
  const auto zh = ko1_euclidean(EuclideanDescriptor::parse("Z[1/2]"));
  CHECK(*zh.order() == 8);
  CHECK(zh.group.invariant_factors() == std::vector<Int>{Int(2), Int(2), Int(2)});
  CHECK(zh.group.to_string() == "Z/2 ⊕ Z/2 ⊕ Z/2");
  for (const auto& w : zh.witnesses) CHECK(w.preserves_form);
  CHECK(zh.witnesses[0].determinant == "-1");
  for (long q : {3L, 5L, 7L, 9L}) {
    const auto k = ko1_euclidean(EuclideanDescriptor::parse("F_" + std::to_string(q)));
    CHECK(*k.order() == 4);
    for (const auto& w : k.witnesses) CHECK(w.preserves_form);
  }
  try {
    ko1_euclidean(EuclideanDescriptor::parse("Z"));
    FAIL("expected an error");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()) == "2 not invertible");
  }
  for (const std::string s : {"Z[1/2]", "F_3", "F_25", "F_7[x]", "Q[x]"}) {
    const auto d = EuclideanDescriptor::parse(s);
    const auto k = ko1_euclidean(d);
    const auto sc = unit_square_classes(d);
    CHECK(k.finite == sc.finite);
    if (sc.finite) CHECK(*k.order() == 2 * *sc.order());
  }
}

TEST_CASE("Karoubi table checks") {
  const auto ok = karoubi_check(karoubi_sample_table());
  CHECK(ok.pass());
  CHECK(*ok.ko1->order() == 8);
  CHECK(ok.square_classes->isomorphic(unit_square_classes(EuclideanDescriptor::parse("Z[1/2]")).group));

  auto w2 = karoubi_sample_table();
  w2["groups"]["W2"] = {2};
  const auto r1 = karoubi_check(w2);
  CHECK_FALSE(r1.pass());
  CHECK(*r1.first_violation() == "W^i vanishing");

  auto surj = karoubi_sample_table();
  surj["maps"]["forgetful"] = {{1}};
  const auto r2 = karoubi_check(surj);
  CHECK(*r2.first_violation() == "2Z ⊂ Z");

  auto sq = karoubi_sample_table();
  sq["maps"]["V_to_K1"] = {{1, 0}, {0, 1}};
  CHECK(*karoubi_check(sq).first_violation() == "squaring composite");

  auto shape = karoubi_sample_table();
  shape["maps"]["hyperbolic"] = {{1, 0}};
  CHECK(*karoubi_check(shape).first_violation() == "well-defined maps");

  auto bad = karoubi_sample_table();
  bad["groups"]["K1"] = {2, "x"};
  try {
    karoubi_check(bad);
    FAIL("expected a presentation error");
  } catch (const PresentationError& e) {
    CHECK(std::string(e.what()).find("/groups/K1/1") != std::string::npos);
  }
}
