#include "bocalc/grassring.hpp"

#include <algorithm>
#include <functional>

namespace bocalc {

std::string to_string(CoeffRing c) {
  switch (c) {
    case CoeffRing::Integers: return "Integers";
    case CoeffRing::Rationals: return "Rationals";
    case CoeffRing::GWBase: return "GWBase";
  }
  return "?";
}

CoeffRing coeff_ring_from_string(const std::string& s) {
  if (s == "Integers" || s == "Z") return CoeffRing::Integers;
  if (s == "Rationals" || s == "Q") return CoeffRing::Rationals;
  if (s == "GWBase" || s == "GW") return CoeffRing::GWBase;
  throw PresentationError("unknown coefficient ring '" + s + "'");
}

}  // namespace bocalc

namespace bocalc::grass {

std::map<Partition, Int> pieri_elementary(const Partition& lambda, int k, int rows, int cols) {
  std::map<Partition, Int> out;
  if (k < 0) return out;
  const int span = std::min(rows, lambda.length() + k);
  if (span < 0) return out;
  std::vector<int> mu;
  // Add a vertical strip: at most one box per row, rows 0..span-1.
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (left == 0) {
      std::vector<int> parts = mu;
      for (int i = row; i < lambda.length(); ++i) parts.push_back(lambda.part(i));
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      if (cols >= 0 && !parts.empty() && parts.front() > cols) return;
      out[Partition(parts)] += 1;
      return;
    }
    if (row >= span || span - row < left) return;
    const int base = lambda.part(row);
    const int above = row == 0 ? -1 : mu.back();
    for (int add : {1, 0}) {
      const int v = base + add;
      if (above >= 0 && v > above) continue;
      if (v == 0 && add == 0) {
        // Rows below are empty too; any remaining boxes must go further down,
        // which would break the partition shape.
        return;
      }
      mu.push_back(v);
      rec(row + 1, left - add);
      mu.pop_back();
    }
  };
  rec(0, k);
  return out;
}

std::map<Partition, Int> schur_expand_monomial(const Exponents& e, int rows, int cols) {
  std::map<Partition, Int> cur{{Partition(), Int(1)}};
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw ParameterError("schur_expand_monomial: negative exponent");
    for (int rep = 0; rep < e[i]; ++rep) {
      std::map<Partition, Int> next;
      for (const auto& [lambda, c] : cur)
        for (const auto& [mu, m] : pieri_elementary(lambda, static_cast<int>(i) + 1, rows, cols)) {
          Int& slot = next[mu];
          slot += c * m;
        }
      std::erase_if(next, [](const auto& kv) { return is_zero(kv.second); });
      cur = std::move(next);
    }
  }
  return cur;
}

GrassRing::GrassRing(int r, int n, CoeffRing coeff) : r_(r), n_(n), coeff_(coeff) {
  const auto h = symfun::complete_table(n, r);
  for (int k = n - r + 1; k <= n; ++k) ideal_.push_back(h[static_cast<std::size_t>(k)]);
  basis_ = symfun::enumerate_box_partitions(r, n - r);
}

GrassRing GrassRing::present(int r, int n, CoeffRing coeff) {
  if (r < 0 || n < 0) throw ParameterError("present: negative parameter");
  if (r > n) throw ParameterError("r exceeds n");
  return GrassRing(r, n, coeff);
}

std::optional<std::size_t> GrassRing::index_of(const Partition& p) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), p);
  if (it == basis_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

nlohmann::json GrassRing::to_json() const {
  nlohmann::json ideal = nlohmann::json::array();
  for (const auto& g : ideal_) ideal.push_back(poly_to_json(g));
  nlohmann::json basis = nlohmann::json::array();
  nlohmann::json bideg = nlohmann::json::array();
  for (const auto& p : basis_) {
    basis.push_back(symfun::to_json(p));
    const auto [a, b] = bidegree_of_weight(p.weight());
    bideg.push_back({a, b});
  }
  return {{"r", r_},
          {"n", n_},
          {"coeff", bocalc::to_string(coeff_)},
          {"generators", symfun::generator_names(r_, "p")},
          {"ideal", ideal},
          {"basis", basis},
          {"basis_bidegrees", bideg},
          {"rank", basis_.size()}};
}

std::string to_string(RestrictionKind k) {
  switch (k) {
    case RestrictionKind::Alpha: return "alpha";
    case RestrictionKind::Beta: return "beta";
    case RestrictionKind::Composite: return "composite";
  }
  return "?";
}

RestrictionKind restriction_kind_from_string(const std::string& s) {
  if (s == "alpha") return RestrictionKind::Alpha;
  if (s == "beta") return RestrictionKind::Beta;
  if (s == "composite") return RestrictionKind::Composite;
  throw PresentationError("unknown restriction kind '" + s + "'");
}

Matrix<Int> SchurMap::dense() const {
  Matrix<Int> m(target_basis.size(), source_basis.size(), Int(0));
  for (const auto& [i, j, v] : entries) m(i, j) = v;
  return m;
}

nlohmann::json SchurMap::to_json() const {
  nlohmann::json src = nlohmann::json::array();
  for (const auto& p : source_basis) src.push_back(symfun::to_json(p));
  nlohmann::json tgt = nlohmann::json::array();
  for (const auto& p : target_basis) tgt.push_back(symfun::to_json(p));
  nlohmann::json ent = nlohmann::json::array();
  for (const auto& [i, j, v] : entries) ent.push_back({i, j, v.get_str()});
  return {{"source", {source.first, source.second}},
          {"target", {target.first, target.second}},
          {"source_basis", src},
          {"target_basis", tgt},
          {"entries", ent}};
}

SchurMap restriction(const GrassRing& source, const GrassRing& target, RestrictionKind kind) {
  const int dr = source.r() - target.r();
  const int dn = source.n() - target.n();
  bool ok = false;
  switch (kind) {
    case RestrictionKind::Alpha: ok = dr == 0 && dn >= 0; break;
    case RestrictionKind::Beta: ok = dr >= 0 && dn == dr; break;
    case RestrictionKind::Composite: ok = dr >= 0 && dn >= dr; break;
  }
  if (!ok)
    throw ParameterError("HGr(" + std::to_string(target.r()) + "," + std::to_string(target.n()) +
                         ") does not embed in HGr(" + std::to_string(source.r()) + "," +
                         std::to_string(source.n()) + ") by " + to_string(kind));
  SchurMap m;
  m.source = {source.r(), source.n()};
  m.target = {target.r(), target.n()};
  m.source_basis = source.basis();
  m.target_basis = target.basis();
  for (std::size_t j = 0; j < m.source_basis.size(); ++j)
    if (auto i = target.index_of(m.source_basis[j])) m.entries.emplace_back(*i, j, Int(1));
  return m;
}

SchurMap compose(const SchurMap& outer, const SchurMap& inner) {
  if (outer.source != inner.target) throw ParameterError("compose: rings do not match");
  const Matrix<Int> prod = outer.dense() * inner.dense();
  SchurMap m;
  m.source = inner.source;
  m.target = outer.target;
  m.source_basis = inner.source_basis;
  m.target_basis = outer.target_basis;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (!is_zero(prod(i, j))) m.entries.emplace_back(i, j, prod(i, j));
  return m;
}

PowerSeriesRing::PowerSeriesRing(int gens, bool countable, int w, CoeffRing coeff)
    : gens_(gens), countable_(countable), w_(w), coeff_(coeff), weights_(symfun::generator_weights(gens)) {}

PowerSeriesRing PowerSeriesRing::limit_ring(std::optional<int> r, int truncation, CoeffRing coeff) {
  if (truncation < 0) throw ParameterError("limit_ring: negative truncation weight");
  if (r && *r < 0) throw ParameterError("limit_ring: negative generator count");
  return PowerSeriesRing(r ? *r : truncation, !r.has_value(), truncation, coeff);
}

std::vector<Exponents> PowerSeriesRing::basis() const {
  std::vector<Exponents> out;
  Exponents cur(generators(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
    if (i == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; static_cast<long>(a) * weights_[i] <= budget; ++a) {
      cur[i] = a;
      rec(i + 1, budget - static_cast<long>(a) * weights_[i]);
    }
    cur[i] = 0;
  };
  rec(0, w_);
  std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) {
    const long wa = Polynomial<Int>::weight_of(a, weights_);
    const long wb = Polynomial<Int>::weight_of(b, weights_);
    if (wa != wb) return wa < wb;
    return GrlexGreater{}(a, b);
  });
  return out;
}

nlohmann::json PowerSeriesRing::to_json() const {
  nlohmann::json monos = nlohmann::json::array();
  for (const auto& e : basis()) monos.push_back(e);
  return {{"generators", gens_},
          {"countable", countable_},
          {"truncation", w_},
          {"coeff", bocalc::to_string(coeff_)},
          {"basis", monos}};
}

}  // namespace bocalc::grass
