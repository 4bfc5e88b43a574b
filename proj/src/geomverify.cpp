#include "bocalc/geomverify.hpp"

#include <map>

#include "bocalc/symfun.hpp"

namespace bocalc::geom {

namespace {

RPoly c(long v) { return RPoly(Rat(v), 1); }
RPoly t() { return RPoly::variable(1, 0); }

PolyMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  PolyMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = c(v);
    ++i;
  }
  return m;
}

PolyMatrix identity_poly(std::size_t n) { return PolyMatrix::identity(n, c(1), c(0)); }

nlohmann::json matrix_json(const PolyMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string({"t"}));
    out.push_back(row);
  }
  return out;
}

nlohmann::json matrix_json(const RatMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(row);
  }
  return out;
}

// Basis of {x : Ax = 0} over ℚ, one vector per free column of the reduced
// echelon form.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> a, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rat inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rat f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(v);
  }
  return basis;
}

std::vector<RatMatrix> invariant_basis(const PolyMatrix& m, int symmetry) {
  const std::size_t n = m.rows();
  const std::size_t nn = n * n;
  std::size_t nv = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) nv = std::max(nv, m(i, j).nvars());
  const auto pad = [&](Exponents e) {
    e.resize(nv, 0);
    return e;
  };
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::map<Exponents, std::vector<Rat>, GrlexGreater> eqs;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const RPoly prod = m(p, i) * m(q, j);
          for (const auto& [e, coef] : prod.terms()) {
            auto& eq = eqs.try_emplace(pad(e), nn, Rat(0)).first->second;
            eq[p * n + q] += coef;
          }
        }
      auto& eq = eqs.try_emplace(Exponents(nv, 0), nn, Rat(0)).first->second;
      eq[i * n + j] -= 1;
      for (auto& [e, r] : eqs) rows.push_back(std::move(r));
    }
  if (symmetry != 0)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p; q < n; ++q) {
        std::vector<Rat> r(nn, Rat(0));
        r[p * n + q] += 1;
        r[q * n + p] -= symmetry;
        rows.push_back(r);
      }
  std::vector<RatMatrix> out;
  for (const auto& v : nullspace(rows, nn)) {
    RatMatrix b(n, n, Rat(0));
    for (std::size_t k = 0; k < nn; ++k) b(k / n, k % n) = v[k];
    out.push_back(b);
  }
  return out;
}

RatMatrix rat_from(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size(), Rat(0));
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool divisible(const RPoly& a, const RPoly& g) {
  if (a.is_zero()) return true;
  if (g.is_zero()) return false;
  return divide_exact(a, g).has_value();
}

bool matrix_divisible(const PolyMatrix& m, const RPoly& g) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!divisible(m(i, j), g)) return false;
  return true;
}

LinearForm add_scaled(const LinearForm& u, const RPoly& g, const LinearForm& v) {
  LinearForm out = u;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += g * v[i];
  return out;
}

LinearForm scaled(const LinearForm& u, const RPoly& g) {
  LinearForm out = u;
  for (auto& x : out) x = x * g;
  return out;
}

void validate(const LiftData& d) {
  const std::size_t n = d.phi.rows();
  if (!d.phi.square()) throw ParameterError("φ must be square");
  if (d.phi.transpose() != -d.phi) throw ParameterError("φ must be skew");
  if (d.u.size() % 2 != 0 || d.w.size() % 2 != 0) throw ParameterError("u and w need an even number of forms");
  if (d.v.size() != d.u.size()) throw ParameterError("u and v must have the same length");
  for (const auto* list : {&d.u, &d.v, &d.w})
    for (const auto& f : *list)
      if (f.size() != n) throw ParameterError("linear form of length " + std::to_string(f.size()) + " on a module of rank " + std::to_string(n));
}

PolyMatrix zero_matrix(std::size_t n) { return PolyMatrix(n, n, RPoly()); }

PolyMatrix pair_sum(const std::vector<LinearForm>& f, std::size_t n) {
  PolyMatrix s = zero_matrix(n);
  for (std::size_t i = 0; i + 1 < f.size(); i += 2) s = s + wedge(f[i], f[i + 1]);
  return s;
}

LinearForm unit_form(std::size_t n, std::size_t i, long sign = 1) {
  LinearForm f(n, RPoly());
  f[i] = c(sign);
  return f;
}

}  // namespace

bool Report::ok() const {
  for (const auto& ch : checks)
    if (!ch.passed) return false;
  return true;
}

void Report::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

nlohmann::json Report::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& ch : checks) {
    nlohmann::json cj{{"name", ch.name}, {"passed", ch.passed}};
    if (!ch.detail.empty()) cj["detail"] = ch.detail;
    cs.push_back(cj);
  }
  return {{"title", title}, {"ok", ok()}, {"checks", cs}, {"data", data}};
}

PolyMatrix m_path() {
  const RPoly x = t();
  const RPoly a = c(1) - x * x;
  const RPoly b = c(2) * x - x * x * x;
  PolyMatrix m = zero_matrix(4);
  m(0, 0) = a;
  m(0, 2) = -x;
  m(1, 1) = a;
  m(1, 3) = -b;
  m(2, 0) = b;
  m(2, 2) = a;
  m(3, 1) = x;
  m(3, 3) = a;
  return m;
}

PolyMatrix m1() { return from_ints({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}); }

std::vector<PolyMatrix> m1_factors() {
  const PolyMatrix outer = from_ints({{1, 0, 0, 0}, {0, 1, 0, -1}, {1, 0, 1, 0}, {0, 0, 0, 1}});
  const PolyMatrix middle = from_ints({{1, 0, -1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}});
  return {outer, middle, outer};
}

PolyMatrix evaluate_at(const PolyMatrix& m, const Rat& value) {
  return m.map([&](const RPoly& p) { return p.evaluate(0, value); });
}

PolyMatrix constant_matrix(const RatMatrix& m, std::size_t nvars) {
  return m.map([&](const Rat& x) { return RPoly(x, nvars); });
}

nlohmann::json InvariantForms::to_json() const {
  nlohmann::json sym = nlohmann::json::array(), sk = nlohmann::json::array();
  for (const auto& b : symmetric) sym.push_back(matrix_json(b));
  for (const auto& b : skew) sk.push_back(matrix_json(b));
  return {{"dimension", dimension()}, {"symmetric_dimension", symmetric.size()}, {"skew_dimension", skew.size()},
          {"symmetric", sym}, {"skew", sk}};
}

InvariantForms solve_invariant_forms(const PolyMatrix& m) {
  if (!m.square() || m.rows() == 0) throw ParameterError("solve_invariant_forms: matrix must be square and nonempty");
  return {invariant_basis(m, 1), invariant_basis(m, -1)};
}

bool preserves(const PolyMatrix& m, const RatMatrix& b) {
  const PolyMatrix bp = constant_matrix(b, 1);
  return m.transpose() * bp * m == bp;
}

Report verify_M_path() {
  Report r;
  r.title = "M(t) path in Sp4 ∩ O4";
  const PolyMatrix m = m_path();
  r.data["M"] = matrix_json(m);
  r.add("M(0) = I", evaluate_at(m, Rat(0)) == identity_poly(4));
  r.add("M(1) = M1", evaluate_at(m, Rat(1)) == m1());
  const RPoly det = symfun::bareiss_determinant(m);
  r.add("det M(t) = 1", det == c(1), "det = " + det.to_string({"t"}));

  // Blocks on coordinates {1,3} and {2,4}.
  const auto block = [&](std::size_t i, std::size_t j) {
    PolyMatrix b(2, 2);
    const std::size_t idx[2] = {i, j};
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t e = 0; e < 2; ++e) b(a, e) = m(idx[a], idx[e]);
    return b;
  };
  bool off_block_zero = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if ((i % 2) != (j % 2) && !m(i, j).is_zero()) off_block_zero = false;
  r.add("block form on {1,3} and {2,4}", off_block_zero);
  const PolyMatrix a = block(0, 2), b = block(1, 3);
  r.add("second block is the inverse transpose of the first", b * a.transpose() == PolyMatrix::identity(2, c(1), c(0)));

  const InvariantForms forms = solve_invariant_forms(m);
  r.data["invariant_forms"] = forms.to_json();
  r.add("nonzero symmetric invariant form", !forms.symmetric.empty(), std::to_string(forms.symmetric.size()) + "-dimensional");
  r.add("nonzero skew invariant form", !forms.skew.empty(), std::to_string(forms.skew.size()) + "-dimensional");
  bool all = true;
  for (const auto* list : {&forms.symmetric, &forms.skew})
    for (const auto& f : *list) all = all && preserves(m, f);
  r.add("every returned form is invariant", all);
  const RatMatrix split = rat_from({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  const RatMatrix omega = rat_from({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
  r.add("split pairing B(e1,e2) = B(e3,e4) = 1 is invariant", preserves(m, split));
  r.add("skew form ω(e1,e3) = ω(e2,e4) = 1 is invariant", preserves(m, omega));
  return r;
}

Report verify_M1_factorization() {
  Report r;
  r.title = "M1 as a product of elementary matrices";
  const auto f = m1_factors();
  r.add("product of the three factors = M1", f[0] * f[1] * f[2] == m1());
  const InvariantForms forms = solve_invariant_forms(m_path());
  r.data["invariant_forms"] = forms.to_json();
  for (std::size_t k = 0; k < f.size(); ++k) {
    const std::string name = "factor " + std::to_string(k + 1);
    r.add(name + " has determinant 1", symfun::bareiss_determinant(f[k]) == c(1));
    bool skew_ok = true, sym_ok = true;
    for (const auto& b : forms.skew) skew_ok = skew_ok && preserves(f[k], b);
    for (const auto& b : forms.symmetric) sym_ok = sym_ok && preserves(f[k], b);
    r.add(name + " preserves the skew invariant forms", skew_ok);
    r.add(name + " preserves the symmetric invariant forms", sym_ok);
  }
  return r;
}

bool quadratic_section_identity(int r) {
  if (r < 1) throw ParameterError("quadratic_section_identity: r must be at least 1");
  const std::size_t n = static_cast<std::size_t>(r);
  const std::size_t nvars = n + n * (n + 1) / 2;
  std::vector<std::vector<std::size_t>> a_index(n, std::vector<std::size_t>(n, 0));
  std::size_t next = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a_index[i][j] = next++;

  RPoly lhs(nvars), rhs(nvars);
  for (std::size_t i = 0; i < n; ++i) {
    const RPoly s_odd = RPoly::variable(nvars, i);
    RPoly s_even(nvars);
    for (std::size_t j = i; j < n; ++j) s_even += RPoly::variable(nvars, a_index[i][j]) * RPoly::variable(nvars, j);
    lhs += s_odd * s_even;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Exponents e(nvars, 0);
      e[i] += 1;
      e[j] += 1;
      e[a_index[i][j]] = 1;
      rhs += RPoly::monomial(e, Rat(1));
    }
  return lhs == rhs;
}

Report quadratic_section_report(int max_r) {
  Report r;
  r.title = "quadratic local section identity";
  for (int k = 1; k <= max_r; ++k) r.add("r = " + std::to_string(k), quadratic_section_identity(k));
  return r;
}

PolyMatrix wedge(const LinearForm& u, const LinearForm& v) {
  if (u.size() != v.size()) throw ParameterError("wedge: forms of different lengths");
  const std::size_t n = u.size();
  PolyMatrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u[i] * v[j] - u[j] * v[i];
  return m;
}

PolyMatrix lift_sum(const LiftData& d) {
  validate(d);
  const std::size_t n = d.phi.rows();
  std::vector<LinearForm> lifted;
  for (std::size_t i = 0; i < d.u.size(); ++i) lifted.push_back(add_scaled(d.u[i], d.g, d.v[i]));
  std::vector<LinearForm> gw;
  for (const auto& w : d.w) gw.push_back(scaled(w, d.g));
  return pair_sum(lifted, n) + pair_sum(gw, n);
}

bool verify_symplectic_lift(const LiftData& d) { return lift_sum(d) == d.phi; }

bool verify_first_order(const LiftData& d) {
  LiftData no_w = d;
  no_w.w.clear();
  const PolyMatrix residual = d.phi - lift_sum(no_w);
  if (d.g.is_zero()) return residual.is_zero();
  return matrix_divisible(residual, d.g * d.g);
}

bool alternating_congruence(const LiftData& d) {
  validate(d);
  const std::size_t n = d.phi.rows();
  PolyMatrix first = zero_matrix(n);
  for (std::size_t j = 0; j < d.u.size(); ++j) {
    const long sign = (j + 1) % 2 == 0 ? 1 : -1;
    first = first + wedge(d.u[j], scaled(d.v[j], c(sign)));
  }
  const PolyMatrix residual = d.phi - pair_sum(d.u, n) - first.map([&](const RPoly& p) { return d.g * p; });
  if (d.g.is_zero()) return residual.is_zero();
  return matrix_divisible(residual, d.g * d.g);
}

std::vector<LinearForm> from_alternating_indexing(const std::vector<LinearForm>& vp) {
  if (vp.size() % 2 != 0) throw ParameterError("from_alternating_indexing: odd number of forms");
  std::vector<LinearForm> v(vp.size());
  for (std::size_t i = 0; i < vp.size(); i += 2) {
    v[i] = scaled(vp[i + 1], c(-1));
    v[i + 1] = scaled(vp[i], c(-1));
  }
  return v;
}

LiftData lift_example() {
  LiftData d;
  const RPoly x = t();
  d.phi = zero_matrix(2);
  d.phi(0, 1) = c(1) + x + x * x;
  d.phi(1, 0) = -d.phi(0, 1);
  d.g = x;
  d.u = {unit_form(2, 0), unit_form(2, 1)};
  // Alternating witness: −u1 ∧ v'1 = e1 ∧ e2.
  const std::vector<LinearForm> vp{unit_form(2, 1, -1), LinearForm(2, RPoly())};
  d.v = from_alternating_indexing(vp);
  d.w = {unit_form(2, 0), unit_form(2, 1)};
  return d;
}

Report verify_symplectic_lift_report() {
  Report r;
  r.title = "symplectic lift identity";
  const LiftData d = lift_example();
  r.data["phi"] = matrix_json(d.phi);
  r.data["g"] = d.g.to_string({"t"});
  const std::size_t n = d.phi.rows();
  r.add("Σ u∧u ≡ φ mod g", matrix_divisible(d.phi - pair_sum(d.u, n), d.g));

  LiftData alternating_v = d;
  alternating_v.v = {unit_form(2, 1, -1), LinearForm(2, RPoly())};
  r.add("alternating congruence for v' holds mod g²", alternating_congruence(alternating_v));
  r.add("converted v satisfies the lifted identity mod g²", verify_first_order(d));
  r.add("exact identity with w", verify_symplectic_lift(d));
  r.add("v' used without reindexing is not a first-order witness", !verify_first_order(alternating_v),
        "the alternating sum pairs u_j with v_j; the product expansion pairs u_{2i−1} with v_{2i}");

  LiftData trivial;
  trivial.phi = zero_matrix(2);
  trivial.phi(0, 1) = c(1);
  trivial.phi(1, 0) = c(-1);
  trivial.g = RPoly();
  trivial.u = {unit_form(2, 0), unit_form(2, 1)};
  trivial.v = {LinearForm(2, RPoly()), LinearForm(2, RPoly())};
  r.add("g = 0 with coordinate forms", verify_symplectic_lift(trivial));

  LiftData perturbed = d;
  perturbed.v[0][0] += c(1);
  r.add("perturbed v is rejected", !verify_symplectic_lift(perturbed));
  return r;
}

}  // namespace bocalc::geom
