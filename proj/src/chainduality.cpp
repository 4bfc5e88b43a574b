#include "bocalc/chainduality.hpp"

#include <algorithm>
#include <functional>

namespace bocalc::chain {

namespace {

Poly constant(long c) { return Poly(Rat(c)); }

bool is_unit_constant(const Poly& p) {
  if (!p.is_constant() || p.is_zero()) return false;
  const Rat c = p.constant_term();
  return c == 1 || c == -1;
}

// Parity of inversions between two sorted disjoint index lists.
int merge_sign(const std::vector<int>& s, const std::vector<int>& t) {
  long inv = 0;
  for (int a : s)
    for (int b : t)
      if (a > b) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::size_t index_of_subset(const std::vector<std::vector<int>>& list, const std::vector<int>& s) {
  const auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) throw std::logic_error("subset not found");
  return static_cast<std::size_t>(it - list.begin());
}

nlohmann::json pmat_json(const PMat& m, const std::vector<std::string>& names) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string(names));
    rows.push_back(row);
  }
  return rows;
}

std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> positions(const TensorBasis& b) {
  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> pos;
  for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = i;
  return pos;
}

FreeComplex embed(const FreeComplex& x, std::size_t total, std::size_t offset) {
  std::vector<std::size_t> ranks;
  for (int k = x.lo(); k <= x.hi(); ++k) ranks.push_back(x.rank(k));
  std::map<int, PMat> d;
  for (int k = x.lo() + 1; k <= x.hi(); ++k) d[k] = x.d(k).map([&](const Poly& p) { return p.embed(total, offset); });
  return FreeComplex(total, x.lo(), ranks, d);
}

SymmetricComplex embed(const SymmetricComplex& m, std::size_t total, std::size_t offset) {
  SymmetricComplex out{embed(m.x, total, offset), m.n, {}};
  for (const auto& [k, f] : m.phi) out.phi[k] = f.map([&](const Poly& p) { return p.embed(total, offset); });
  return out;
}

// Scalar c ∈ {1, −1} with a = c·b, or 0.
int scalar_sign(const std::vector<PMat>& a, const std::vector<PMat>& b) {
  for (int c : {1, -1}) {
    bool all = true;
    for (std::size_t i = 0; i < a.size() && all; ++i)
      if (a[i] != (c == 1 ? b[i] : -b[i])) all = false;
    if (all) return c;
  }
  return 0;
}

}  // namespace

int Conventions::transpose_sign(int n, int k) const {
  long e = static_cast<long>(k) * (n - k);
  if (transpose_includes_n) e += n;
  return e % 2 == 0 ? 1 : -1;
}

nlohmann::json Conventions::to_json() const {
  return {{"dual_differential", "(d^∨)_k = (−1)^k (d_{1−k})ᵀ"},
          {"double_dual", "η_k = (−1)^k"},
          {"shift", "X[n]_k = X_{k−n}, differential (−1)^n d"},
          {"transpose", transpose_includes_n ? "φᵗ_k = (−1)^{n+k(n−k)} (φ_{n−k})ᵀ" : "φᵗ_k = (−1)^{k(n−k)} (φ_{n−k})ᵀ"},
          {"tensor_differential", "d(m⊗n) = dm⊗n + (−1)^{|m|} m⊗dn"},
          {"tensor_form", "(φ⊗ψ) on X_a⊗Y_b = (−1)^{b(r−a)} φ_a⊗ψ_b"},
          {"swap", "m⊗n ↦ (−1)^{|m||n|} n⊗m"}};
}

PMat zero_pmat(std::size_t rows, std::size_t cols) { return PMat(rows, cols); }

PMat identity_pmat(std::size_t n, int sign) { return PMat::identity(n, constant(sign)); }

PMat kron(const PMat& a, const PMat& b) {
  PMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

// ---------------------------------------------------------------- FreeComplex

FreeComplex::FreeComplex(std::size_t nvars, int lo, std::vector<std::size_t> ranks, std::map<int, PMat> diffs)
    : nvars_(nvars), lo_(lo), ranks_(std::move(ranks)), d_(std::move(diffs)) {
  if (ranks_.empty()) ranks_.push_back(0);
  for (const auto& [k, m] : d_)
    if (m.rows() != rank(k - 1) || m.cols() != rank(k))
      throw ParameterError("differential d_" + std::to_string(k) + " has the wrong shape");
}

std::size_t FreeComplex::rank(int k) const {
  if (k < lo_ || k > hi()) return 0;
  return ranks_[static_cast<std::size_t>(k - lo_)];
}

PMat FreeComplex::d(int k) const {
  auto it = d_.find(k);
  if (it != d_.end()) return it->second;
  return PMat(rank(k - 1), rank(k));
}

bool FreeComplex::d_squared_zero() const {
  for (int k = lo_ + 2; k <= hi(); ++k)
    if (!(d(k - 1) * d(k)).is_zero()) return false;
  return true;
}

std::size_t FreeComplex::total_rank() const {
  std::size_t t = 0;
  for (auto r : ranks_) t += r;
  return t;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

nlohmann::json FreeComplex::to_json(const std::vector<std::string>& names) const {
  const auto nm = names.empty() ? default_variable_names(nvars_) : names;
  nlohmann::json ranks = nlohmann::json::object();
  nlohmann::json diffs = nlohmann::json::object();
  for (int k = lo_; k <= hi(); ++k) {
    ranks[std::to_string(k)] = rank(k);
    if (k > lo_) diffs[std::to_string(k)] = pmat_json(d(k), nm);
  }
  return {{"variables", nm}, {"lo", lo_}, {"hi", hi()}, {"ranks", ranks}, {"differentials", diffs}};
}

PMat component(const ChainMap& f, int k, std::size_t rows, std::size_t cols) {
  auto it = f.find(k);
  if (it == f.end()) return PMat(rows, cols);
  if (it->second.rows() != rows || it->second.cols() != cols)
    throw ParameterError("chain map component " + std::to_string(k) + " has the wrong shape");
  return it->second;
}

bool is_chain_map(const ChainMap& f, const FreeComplex& x, const FreeComplex& y) {
  const int lo = std::min(x.lo(), y.lo());
  const int hi = std::max(x.hi(), y.hi()) + 1;
  for (int k = lo; k <= hi; ++k) {
    const PMat fk = component(f, k, y.rank(k), x.rank(k));
    const PMat fk1 = component(f, k - 1, y.rank(k - 1), x.rank(k - 1));
    if (y.d(k) * fk != fk1 * x.d(k)) return false;
  }
  return true;
}

FreeComplex dual(const FreeComplex& x) {
  std::vector<std::size_t> ranks;
  for (int k = -x.hi(); k <= -x.lo(); ++k) ranks.push_back(x.rank(-k));
  std::map<int, PMat> d;
  for (int k = -x.hi() + 1; k <= -x.lo(); ++k) {
    PMat m = x.d(1 - k).transpose();
    d[k] = Conventions::dual_sign(k) == 1 ? m : -m;
  }
  return FreeComplex(x.nvars(), -x.hi(), ranks, d);
}

FreeComplex shift(const FreeComplex& x, int n) {
  std::vector<std::size_t> ranks;
  for (int k = x.lo(); k <= x.hi(); ++k) ranks.push_back(x.rank(k));
  std::map<int, PMat> d;
  for (int k = x.lo() + 1; k <= x.hi(); ++k) {
    const PMat m = x.d(k);
    d[k + n] = Conventions::shift_sign(n) == 1 ? m : -m;
  }
  return FreeComplex(x.nvars(), x.lo() + n, ranks, d);
}

ChainMap eta(const FreeComplex& x) {
  ChainMap f;
  for (int k = x.lo(); k <= x.hi(); ++k) f[k] = identity_pmat(x.rank(k), Conventions::eta(k));
  return f;
}

// ---------------------------------------------------------------- SymmetricComplex

PMat SymmetricComplex::phi_at(int k) const { return component(phi, k, x.rank(n - k), x.rank(k)); }

ChainMap SymmetricComplex::transpose(const Conventions& c) const {
  ChainMap t;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    PMat m = phi_at(n - k).transpose();
    t[k] = c.transpose_sign(n, k) == 1 ? m : -m;
  }
  return t;
}

bool SymmetricComplex::is_chain_map() const { return chain::is_chain_map(phi, x, shift(dual(x), n)); }

bool SymmetricComplex::is_symmetric(const Conventions& c) const {
  const ChainMap t = transpose(c);
  for (int k = x.lo(); k <= x.hi(); ++k)
    if (component(t, k, x.rank(n - k), x.rank(k)) != phi_at(k)) return false;
  return true;
}

bool SymmetricComplex::is_unimodular() const {
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const PMat m = phi_at(k);
    if (m.rows() != m.cols()) return false;
    std::vector<int> row_count(m.rows(), 0), col_count(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        if (!is_unit_constant(m(i, j))) return false;
        ++row_count[i];
        ++col_count[j];
      }
    for (int v : row_count)
      if (v != 1) return false;
    for (int v : col_count)
      if (v != 1) return false;
  }
  return true;
}

nlohmann::json SymmetricComplex::to_json(const std::vector<std::string>& names) const {
  const auto nm = names.empty() ? default_variable_names(x.nvars()) : names;
  nlohmann::json form = nlohmann::json::object();
  for (int k = x.lo(); k <= x.hi(); ++k) form[std::to_string(k)] = pmat_json(phi_at(k), nm);
  return {{"complex", x.to_json(nm)}, {"degree", n}, {"form", form}};
}

SymmetricComplex unit_form(std::size_t nvars) {
  SymmetricComplex u{FreeComplex(nvars, 0, {1}, {}), 0, {}};
  u.phi[0] = identity_pmat(1);
  return u;
}

// ---------------------------------------------------------------- Koszul

std::vector<std::vector<int>> subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

SymmetricComplex koszul(int n) {
  if (n < 1) throw ParameterError("koszul needs n ≥ 1");
  const auto nv = static_cast<std::size_t>(n);
  std::vector<std::vector<std::vector<int>>> basis;
  std::vector<std::size_t> ranks;
  for (int p = 0; p <= n; ++p) {
    basis.push_back(subsets(n, p));
    ranks.push_back(basis.back().size());
  }
  std::map<int, PMat> d;
  for (int p = 1; p <= n; ++p) {
    PMat m(ranks[static_cast<std::size_t>(p - 1)], ranks[static_cast<std::size_t>(p)]);
    const auto& cols = basis[static_cast<std::size_t>(p)];
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t j = 0; j < cols[c].size(); ++j) {
        std::vector<int> rest = cols[c];
        rest.erase(rest.begin() + static_cast<long>(j));
        const std::size_t r = index_of_subset(basis[static_cast<std::size_t>(p - 1)], rest);
        Poly x = Poly::variable(nv, static_cast<std::size_t>(cols[c][j]));
        m(r, c) = j % 2 == 0 ? x : -x;
      }
    d[p] = m;
  }
  SymmetricComplex k{FreeComplex(nv, 0, ranks, d), n, {}};
  for (int p = 0; p <= n; ++p) {
    const auto& cols = basis[static_cast<std::size_t>(p)];
    const auto& rows = basis[static_cast<std::size_t>(n - p)];
    PMat m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::vector<int> comp;
      for (int v = 0; v < n; ++v)
        if (!std::binary_search(cols[c].begin(), cols[c].end(), v)) comp.push_back(v);
      const int sign = (p % 2 == 0 ? 1 : -1) * merge_sign(cols[c], comp);
      m(index_of_subset(rows, comp), c) = constant(sign);
    }
    k.phi[p] = m;
  }
  if (!k.x.d_squared_zero() || !k.is_chain_map() || !k.is_symmetric())
    throw std::logic_error("koszul form failed its construction checks");
  return k;
}

ChainMap contracting_homotopy(const SymmetricComplex& k, int i) {
  const int n = static_cast<int>(k.x.nvars());
  if (i < 1 || i > n) throw ParameterError("variable index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  const int v = i - 1;
  Exponents e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(v)] = -1;
  const Poly inv = Poly::monomial(e, Rat(1));
  ChainMap s;
  for (int p = 0; p < n; ++p) {
    const auto cols = subsets(n, p);
    const auto rows = subsets(n, p + 1);
    PMat m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (std::binary_search(cols[c].begin(), cols[c].end(), v)) continue;
      std::vector<int> big = cols[c];
      const auto before = std::count_if(big.begin(), big.end(), [v](int t) { return t < v; });
      big.insert(std::lower_bound(big.begin(), big.end(), v), v);
      m(index_of_subset(rows, big), c) = before % 2 == 0 ? inv : -inv;
    }
    s[p] = m;
  }
  return s;
}

bool is_contracting_homotopy(const FreeComplex& x, const ChainMap& s) {
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const PMat sk = component(s, k, x.rank(k + 1), x.rank(k));
    const PMat sk1 = component(s, k - 1, x.rank(k), x.rank(k - 1));
    if (x.d(k + 1) * sk + sk1 * x.d(k) != identity_pmat(x.rank(k))) return false;
  }
  return true;
}

PMat h0_presentation(const FreeComplex& x) { return x.d(1); }

// ---------------------------------------------------------------- tensor products

TensorBasis tensor_basis(const FreeComplex& x, const FreeComplex& y, int k) {
  TensorBasis out;
  for (int a = x.lo(); a <= x.hi(); ++a) {
    const int b = k - a;
    for (std::size_t i = 0; i < x.rank(a); ++i)
      for (std::size_t j = 0; j < y.rank(b); ++j) out.emplace_back(a, i, j);
  }
  return out;
}

FreeComplex tensor(const FreeComplex& x0, const FreeComplex& y0, bool disjoint) {
  const std::size_t total = disjoint ? x0.nvars() + y0.nvars() : std::max(x0.nvars(), y0.nvars());
  const FreeComplex x = embed(x0, total, 0);
  const FreeComplex y = embed(y0, total, disjoint ? x0.nvars() : 0);
  const int lo = x.lo() + y.lo();
  const int hi = x.hi() + y.hi();
  std::vector<std::size_t> ranks;
  for (int k = lo; k <= hi; ++k) ranks.push_back(tensor_basis(x, y, k).size());
  std::map<int, PMat> d;
  for (int k = lo + 1; k <= hi; ++k) {
    const auto src = tensor_basis(x, y, k);
    const auto tgt = positions(tensor_basis(x, y, k - 1));
    PMat m(ranks[static_cast<std::size_t>(k - 1 - lo)], src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto [a, i, j] = src[c];
      const int b = k - a;
      const PMat dx = x.d(a);
      for (std::size_t r = 0; r < dx.rows(); ++r)
        if (!dx(r, i).is_zero()) m(tgt.at({a - 1, r, j}), c) += dx(r, i);
      const PMat dy = y.d(b);
      for (std::size_t r = 0; r < dy.rows(); ++r)
        if (!dy(r, j).is_zero()) {
          const Poly v = Conventions::tensor_sign(a) == 1 ? dy(r, j) : -dy(r, j);
          m(tgt.at({a, i, r}), c) += v;
        }
    }
    d[k] = m;
  }
  return FreeComplex(total, lo, ranks, d);
}

SymmetricComplex tensor_pair(const SymmetricComplex& m0, const SymmetricComplex& n0, bool disjoint) {
  const std::size_t total = disjoint ? m0.x.nvars() + n0.x.nvars() : std::max(m0.x.nvars(), n0.x.nvars());
  const SymmetricComplex m = embed(m0, total, 0);
  const SymmetricComplex n = embed(n0, total, disjoint ? m0.x.nvars() : 0);
  SymmetricComplex out{tensor(m.x, n.x, false), m.n + n.n, {}};
  const int r = m.n;
  for (int k = out.x.lo(); k <= out.x.hi(); ++k) {
    const auto src = tensor_basis(m.x, n.x, k);
    const auto tgt = positions(tensor_basis(m.x, n.x, out.n - k));
    PMat f(out.x.rank(out.n - k), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto [a, i, j] = src[c];
      const int b = k - a;
      const PMat pa = m.phi_at(a);
      const PMat pb = n.phi_at(b);
      const int sign = Conventions::form_sign(a, b, r);
      for (std::size_t ri = 0; ri < pa.rows(); ++ri) {
        if (pa(ri, i).is_zero()) continue;
        for (std::size_t rj = 0; rj < pb.rows(); ++rj) {
          if (pb(rj, j).is_zero()) continue;
          const Poly v = pa(ri, i) * pb(rj, j);
          f(tgt.at({r - a, ri, rj}), c) += sign == 1 ? v : -v;
        }
      }
    }
    out.phi[k] = f;
  }
  return out;
}

bool is_isometry(const ChainMap& f, const SymmetricComplex& a, const SymmetricComplex& b) {
  if (a.n != b.n) return false;
  if (!is_chain_map(f, a.x, b.x)) return false;
  for (int k = a.x.lo(); k <= a.x.hi(); ++k) {
    const PMat fk = component(f, k, b.x.rank(k), a.x.rank(k));
    const PMat fo = component(f, a.n - k, b.x.rank(a.n - k), a.x.rank(a.n - k));
    if (fo.transpose() * b.phi_at(k) * fk != a.phi_at(k)) return false;
  }
  return true;
}

ChainMap koszul_product_map(int a, int b) {
  const auto ka = koszul(a).x, kb = koszul(b).x;
  ChainMap f;
  for (int k = 0; k <= a + b; ++k) {
    const auto src = tensor_basis(ka, kb, k);
    const auto rows = subsets(a + b, k);
    PMat m(rows.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto [p, i, j] = src[c];
      std::vector<int> s = subsets(a, p)[i];
      const auto tail = subsets(b, k - p)[j];
      for (int t : tail) s.push_back(t + a);
      m(index_of_subset(rows, s), c) = constant(1);
    }
    f[k] = m;
  }
  return f;
}

ChainMap reassociation(const FreeComplex& x, const FreeComplex& y, const FreeComplex& z) {
  const FreeComplex xy = tensor(x, y), yz = tensor(y, z);
  const FreeComplex left = tensor(xy, z), right = tensor(x, yz);
  ChainMap f;
  for (int k = left.lo(); k <= left.hi(); ++k) {
    const auto src = tensor_basis(xy, z, k);
    const auto tgt = positions(tensor_basis(x, yz, k));
    PMat m(right.rank(k), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto [ab, ixy, iz] = src[c];
      const auto [a, ix, iy] = tensor_basis(x, y, ab)[ixy];
      const auto yzb = positions(tensor_basis(y, z, k - a));
      m(tgt.at({a, ix, yzb.at({ab - a, iy, iz})}), c) = constant(1);
    }
    f[k] = m;
  }
  return f;
}

ChainMap swap_map(const FreeComplex& x, const FreeComplex& y) {
  ChainMap f;
  for (int k = x.lo() + y.lo(); k <= x.hi() + y.hi(); ++k) {
    const auto src = tensor_basis(x, y, k);
    const auto tgt = positions(tensor_basis(y, x, k));
    PMat m(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto [a, i, j] = src[c];
      m(tgt.at({k - a, j, i}), c) = constant(Conventions::swap_sign(a, k - a));
    }
    f[k] = m;
  }
  return f;
}

std::string SwapSignReport::sign_symbol() const {
  if (sign == 1) return "1";
  if (sign == -1) return "ε";
  return "none";
}

nlohmann::json SwapSignReport::to_json() const {
  return {{"r", r},
          {"s", s},
          {"sign", sign},
          {"sign_symbol", sign_symbol()},
          {"expected", expected},
          {"swap_is_chain_map", swap_is_chain_map},
          {"ok", ok()}};
}

SwapSignReport swap_sign_check(const SymmetricComplex& m0, const SymmetricComplex& n0) {
  const std::size_t total = m0.x.nvars() + n0.x.nvars();
  const SymmetricComplex m = embed(m0, total, 0);
  const SymmetricComplex n = embed(n0, total, m0.x.nvars());
  const SymmetricComplex mn = tensor_pair(m, n, false);
  const SymmetricComplex nm = tensor_pair(n, m, false);
  const ChainMap tau = swap_map(m.x, n.x);
  SwapSignReport rep;
  rep.r = m.n;
  rep.s = n.n;
  rep.expected = (rep.r * rep.s) % 2 == 0 ? 1 : -1;
  rep.swap_is_chain_map = is_chain_map(tau, mn.x, nm.x);
  std::vector<PMat> transported, original;
  const int deg = mn.n;
  for (int k = mn.x.lo(); k <= mn.x.hi(); ++k) {
    const PMat tk = component(tau, k, nm.x.rank(k), mn.x.rank(k));
    const PMat to = component(tau, deg - k, nm.x.rank(deg - k), mn.x.rank(deg - k));
    transported.push_back(to.transpose() * nm.phi_at(k) * tk);
    original.push_back(mn.phi_at(k));
  }
  rep.sign = scalar_sign(transported, original);
  return rep;
}

// ---------------------------------------------------------------- report

bool KoszulReport::ok() const {
  if (!d_squared_zero || !theta_chain_map || !theta_symmetric || !theta_unimodular || !h0_presentation_ok) return false;
  return std::all_of(homotopies_ok.begin(), homotopies_ok.end(), [](bool b) { return b; });
}

nlohmann::json KoszulReport::to_json() const {
  return {{"n", n},
          {"koszul", k.to_json()},
          {"conventions", Conventions::standard().to_json()},
          {"checks",
           {{"d_squared_zero", d_squared_zero},
            {"theta_chain_map", theta_chain_map},
            {"theta_symmetric", theta_symmetric},
            {"theta_unimodular", theta_unimodular},
            {"h0_presentation", h0_presentation_ok},
            {"contracting_homotopies", homotopies_ok}}},
          {"ok", ok()}};
}

KoszulReport koszul_report(int n) {
  KoszulReport rep;
  rep.n = n;
  rep.k = koszul(n);
  rep.d_squared_zero = rep.k.x.d_squared_zero();
  rep.theta_chain_map = rep.k.is_chain_map();
  rep.theta_symmetric = rep.k.is_symmetric();
  rep.theta_unimodular = rep.k.is_unimodular();
  const PMat h0 = h0_presentation(rep.k.x);
  rep.h0_presentation_ok = h0.rows() == 1 && h0.cols() == static_cast<std::size_t>(n);
  for (int i = 0; rep.h0_presentation_ok && i < n; ++i)
    rep.h0_presentation_ok = h0(0, static_cast<std::size_t>(i)) == Poly::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
  for (int i = 1; i <= n; ++i) rep.homotopies_ok.push_back(is_contracting_homotopy(rep.k.x, contracting_homotopy(rep.k, i)));
  return rep;
}

}  // namespace bocalc::chain
