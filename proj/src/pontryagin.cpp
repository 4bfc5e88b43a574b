#include "bocalc/pontryagin.hpp"

namespace bocalc::pontryagin {

namespace {

std::size_t max_nvars(const std::vector<IntPoly>& xs) {
  std::size_t n = 0;
  for (const auto& x : xs) n = std::max(n, x.nvars());
  return n;
}

}  // namespace

FormalSymplecticBundle FormalSymplecticBundle::split(std::vector<IntPoly> roots) {
  FormalSymplecticBundle b;
  b.r_ = static_cast<int>(roots.size());
  b.split_ = true;
  b.nvars_ = max_nvars(roots);
  // Coefficients of Π (1 + t_j x).
  std::vector<IntPoly> e{IntPoly(Int(1), b.nvars_)};
  for (const auto& t : roots) {
    std::vector<IntPoly> next(e.size() + 1, IntPoly(b.nvars_));
    for (std::size_t k = 0; k < e.size(); ++k) {
      next[k] += e[k];
      next[k + 1] += e[k] * t;
    }
    e = std::move(next);
  }
  b.p_.assign(e.begin() + 1, e.end());
  b.roots_ = std::move(roots);
  return b;
}

FormalSymplecticBundle FormalSymplecticBundle::abstract(int r, std::vector<IntPoly> p) {
  if (r < 0) throw ParameterError("rank must be nonnegative");
  if (p.size() > static_cast<std::size_t>(r)) throw ParameterError("more Pontryagin classes than r = rank/2");
  FormalSymplecticBundle b;
  b.r_ = r;
  b.nvars_ = max_nvars(p);
  p.resize(static_cast<std::size_t>(r), IntPoly(b.nvars_));
  b.p_ = std::move(p);
  return b;
}

IntPoly FormalSymplecticBundle::p(int k) const {
  if (k == 0) return IntPoly(Int(1), nvars_);
  if (k < 0 || k > r_) return IntPoly(nvars_);
  return p_[static_cast<std::size_t>(k - 1)];
}

std::vector<IntPoly> FormalSymplecticBundle::classes() const { return p_; }

nlohmann::json FormalSymplecticBundle::to_json(const std::vector<std::string>& names) const {
  nlohmann::json p = nlohmann::json::array();
  p.push_back("1");
  for (const auto& x : p_) p.push_back(x.to_string(names));
  nlohmann::json out{{"rank", rank()}, {"p", p}, {"split", split_}};
  if (split_) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& t : roots_) roots.push_back(t.to_string(names));
    out["roots"] = roots;
  }
  return out;
}

FormalSymplecticBundle cartan_sum(const FormalSymplecticBundle& e, const FormalSymplecticBundle& f) {
  if (e.is_split() && f.is_split()) {
    std::vector<IntPoly> roots = e.roots();
    roots.insert(roots.end(), f.roots().begin(), f.roots().end());
    return FormalSymplecticBundle::split(std::move(roots));
  }
  const int r = e.r() + f.r();
  std::vector<IntPoly> p;
  for (int k = 1; k <= r; ++k) {
    IntPoly s;
    for (int i = 0; i <= k; ++i) s += e.p(i) * f.p(k - i);
    p.push_back(s);
  }
  return FormalSymplecticBundle::abstract(r, std::move(p));
}

nlohmann::json P1Class::to_json() const {
  return {{"value", value.to_string()},
          {"bidegree", {bidegree.first, bidegree.second}},
          {"isomorphism", isomorphism}};
}

P1Class p1_of_class(long rank, const classcalc::FormalClass& xi) {
  if (rank < 0 || rank % 2 != 0) throw ParameterError("declared rank must be even and nonnegative");
  P1Class out;
  out.value = classcalc::distribute(xi - Int(rank / 2) * classcalc::FormalClass::symbol(classcalc::sym::H));
  return out;
}

grass::SchurVector<GWElem> tau_element(int k, int i, int n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  const auto ring = grass::GrassRing::present(n, 2 * n, CoeffRing::GWBase);
  const auto nv = static_cast<std::size_t>(n);
  Polynomial<GWElem> x = Polynomial<GWElem>::variable(nv, 0) + Polynomial<GWElem>(GWElem(i) * GWElem::hyperbolic(), nv);
  x *= GWElem::beta(k);
  return ring.normal_form(x);
}

nlohmann::json TauClassCheck::to_json() const {
  return {{"computed", computed.to_string()}, {"expected", expected.to_string()}, {"holds", holds}};
}

TauClassCheck tau_class_check(int n, int i) {
  if (n < 1) throw ParameterError("n must be at least 1");
  using classcalc::FormalClass;
  const auto u = FormalClass::symbol(classcalc::universal_symbol(n));
  const auto h = FormalClass::symbol(classcalc::sym::H);
  TauClassCheck c;
  c.computed = p1_of_class(2L * n, u).value + Int(i) * h;
  c.expected = u + Int(i - n) * h;
  c.holds = c.computed == c.expected;
  return c;
}

}  // namespace bocalc::pontryagin
