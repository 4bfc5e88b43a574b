#include "bocalc/towers.hpp"

#include "bocalc/symfun.hpp"

namespace bocalc::towers {

using abelian::int_matrix_from_json;
using abelian::int_matrix_to_json;

std::string to_string(TailPolicy p) {
  switch (p) {
    case TailPolicy::EventuallyConstant: return "eventually-constant";
    case TailPolicy::TemplateRepeating: return "template-repeating";
    case TailPolicy::FinitePrefixOnly: return "finite-prefix-only";
  }
  return "?";
}

TailPolicy tail_policy_from_string(const std::string& s) {
  if (s == "eventually-constant") return TailPolicy::EventuallyConstant;
  if (s == "template-repeating") return TailPolicy::TemplateRepeating;
  if (s == "finite-prefix-only") return TailPolicy::FinitePrefixOnly;
  throw PresentationError("/tail/policy: unknown tail policy '" + s + "'");
}

std::string to_string(MLStatus s) {
  switch (s) {
    case MLStatus::Certificate: return "certificate";
    case MLStatus::Refutation: return "refutation";
    case MLStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

IntMatrix identity(std::size_t n) { return IntMatrix::identity(n, Int(1)); }

std::string where_map(std::size_t k) { return "/maps/" + std::to_string(k); }

// Columns of m as "(a,b,...)" joined, or "0".
std::string describe_span(const IntMatrix& m) {
  std::string out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    std::string col = "(";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i) col += ",";
      col += m(i, j).get_str();
      if (sgn(m(i, j)) != 0) zero = false;
    }
    col += ")";
    if (zero) continue;
    if (!out.empty()) out += ", ";
    out += col;
  }
  return out.empty() ? "⟨0⟩" : "⟨" + out + "⟩";
}

Matrix<Rat> to_rat(const IntMatrix& m) {
  Matrix<Rat> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

Matrix<Rat> inverse(Matrix<Rat> a) {
  const std::size_t n = a.rows();
  Matrix<Rat> inv = Matrix<Rat>::identity(n, Rat(1));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw std::logic_error("singular Gram matrix");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    const Rat s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      const Rat f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Constant term of the characteristic polynomial of g on (A/torsion)⊗Q with
// the factor t^a removed: ± the determinant of g on its invertible part.
Rat invertible_part_constant(const IntMatrix& g, const FGAbelian& a) {
  const IntMatrix w = abelian::integer_kernel(a.relations().transpose()).transpose();
  const std::size_t s = w.rows();
  if (s == 0) return Rat(1);
  const Matrix<Rat> wr = to_rat(w);
  const Matrix<Rat> gr = wr * to_rat(g) * wr.transpose() * inverse(wr * wr.transpose());
  using RPoly = Polynomial<Rat>;
  Matrix<RPoly> m(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      m(i, j) = RPoly(-gr(i, j), 1);
      if (i == j) m(i, j) += RPoly::variable(1, 0);
    }
  const RPoly chi = symfun::bareiss_determinant(m);
  for (long d = 0; d <= static_cast<long>(s); ++d) {
    const Rat c = chi.coeff(Exponents{static_cast<int>(d)});
    if (sgn(c) != 0) return c;
  }
  return Rat(0);
}

// Image chain of the endomorphism-like composites A_{k+j·step} → A_k.
LevelChain image_chain(const Tower& t, std::size_t k, std::size_t step, std::size_t steps) {
  LevelChain ch;
  ch.level = k;
  ch.step = step;
  const FGAbelian& a = t.level(k);
  IntMatrix prev = identity(a.generators());
  ch.images.push_back(describe_span(prev));
  for (std::size_t j = 1; j <= steps; ++j) {
    const IntMatrix cur = t.composite(k, j * step);
    ch.images.push_back(describe_span(cur));
    if (!ch.stable_at && a.subgroup_contains(cur, prev)) ch.stable_at = j - 1;
    prev = cur;
  }
  return ch;
}

FGAbelian level_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_array()) {
    const IntMatrix rel = int_matrix_from_json(j, where);
    return FGAbelian(rel.rows(), rel);
  }
  if (!j.is_object()) throw PresentationError(where + ": expected a relation matrix or an object");
  if (j.contains("orders")) {
    if (!j["orders"].is_array()) throw PresentationError(where + "/orders: expected an array");
    std::vector<Int> orders;
    for (std::size_t i = 0; i < j["orders"].size(); ++i) {
      const auto& o = j["orders"][i];
      if (o.is_number_integer()) orders.emplace_back(o.get<long>());
      else if (o.is_string()) orders.push_back(parse_int(o.get<std::string>()));
      else throw PresentationError(where + "/orders/" + std::to_string(i) + ": not an integer");
    }
    return FGAbelian::from_orders(orders);
  }
  if (!j.contains("generators") || !j["generators"].is_number_integer())
    throw PresentationError(where + "/generators: expected an integer");
  const long g = j["generators"].get<long>();
  if (g < 0) throw PresentationError(where + "/generators: negative");
  IntMatrix rel(static_cast<std::size_t>(g), 0);
  if (j.contains("relations")) rel = int_matrix_from_json(j["relations"], where + "/relations");
  if (rel.rows() != static_cast<std::size_t>(g) && !(rel.rows() == 0 && rel.cols() == 0))
    throw PresentationError(where + "/relations: row count differs from generators");
  if (rel.rows() == 0) rel = IntMatrix(static_cast<std::size_t>(g), 0);
  return FGAbelian(static_cast<std::size_t>(g), rel);
}

}  // namespace

// ---------------------------------------------------------------- Tower

Tower::Tower(std::vector<FGAbelian> levels, std::vector<IntMatrix> maps, TailPolicy tail)
    : levels_(std::move(levels)), maps_(std::move(maps)), tail_(tail) {
  if (levels_.empty()) throw PresentationError("/levels: a tower needs at least one level");
  const std::size_t m = levels_.size();
  const std::size_t expected = tail_ == TailPolicy::TemplateRepeating ? m : m - 1;
  if (maps_.size() != expected)
    throw PresentationError("/maps: expected " + std::to_string(expected) + " maps for " + std::to_string(m) +
                            " levels under " + to_string(tail_));
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const FGAbelian& tgt = levels_[k];
    const FGAbelian& src = levels_[(k + 1) % m];
    if (maps_[k].rows() != tgt.generators() || maps_[k].cols() != src.generators())
      throw PresentationError(where_map(k) + ": shape " + std::to_string(maps_[k].rows()) + "×" +
                              std::to_string(maps_[k].cols()) + " does not match the levels");
    if (!abelian::is_well_defined(maps_[k], src, tgt))
      throw PresentationError(where_map(k) + ": relations of the source do not map into relations");
  }
}

std::optional<std::size_t> Tower::known_levels() const {
  if (tail_ == TailPolicy::FinitePrefixOnly) return levels_.size();
  return std::nullopt;
}

const FGAbelian& Tower::level(std::size_t k) const {
  switch (tail_) {
    case TailPolicy::TemplateRepeating: return levels_[k % levels_.size()];
    case TailPolicy::EventuallyConstant: return levels_[std::min(k, levels_.size() - 1)];
    case TailPolicy::FinitePrefixOnly:
      if (k >= levels_.size()) throw ParameterError("level " + std::to_string(k) + " lies beyond the supplied data");
      return levels_[k];
  }
  throw std::logic_error("bad tail policy");
}

IntMatrix Tower::map(std::size_t k) const {
  switch (tail_) {
    case TailPolicy::TemplateRepeating: return maps_[k % maps_.size()];
    case TailPolicy::EventuallyConstant:
      if (k < maps_.size()) return maps_[k];
      return identity(levels_.back().generators());
    case TailPolicy::FinitePrefixOnly:
      if (k >= maps_.size()) throw ParameterError("map " + std::to_string(k) + " lies beyond the supplied data");
      return maps_[k];
  }
  throw std::logic_error("bad tail policy");
}

IntMatrix Tower::composite(std::size_t k, std::size_t j) const {
  IntMatrix out = identity(level(k).generators());
  for (std::size_t i = 0; i < j; ++i) out = out * map(k + i);
  return out;
}

Tower Tower::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw PresentationError(": expected an object");
  if (!j.contains("levels") || !j["levels"].is_array()) throw PresentationError("/levels: expected an array");
  if (!j.contains("maps") || !j["maps"].is_array()) throw PresentationError("/maps: expected an array");
  TailPolicy policy = TailPolicy::FinitePrefixOnly;
  if (j.contains("tail")) {
    const auto& t = j["tail"];
    if (t.is_string()) policy = tail_policy_from_string(t.get<std::string>());
    else if (t.is_object() && t.contains("policy") && t["policy"].is_string())
      policy = tail_policy_from_string(t["policy"].get<std::string>());
    else throw PresentationError("/tail: expected {policy: ...}");
  }
  std::vector<FGAbelian> levels;
  for (std::size_t i = 0; i < j["levels"].size(); ++i)
    levels.push_back(level_from_json(j["levels"][i], "/levels/" + std::to_string(i)));
  std::vector<IntMatrix> maps;
  for (std::size_t i = 0; i < j["maps"].size(); ++i) {
    IntMatrix m = int_matrix_from_json(j["maps"][i], where_map(i));
    // A map into or out of a zero-generator level may be written as [].
    const FGAbelian* tgt = i < levels.size() ? &levels[i] : nullptr;
    if (m.rows() == 0 && tgt && tgt->generators() == 0 && !levels.empty())
      m = IntMatrix(0, levels[(i + 1) % levels.size()].generators());
    maps.push_back(m);
  }
  return Tower(std::move(levels), std::move(maps), policy);
}

nlohmann::json Tower::to_json() const {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : levels_)
    levels.push_back({{"generators", l.generators()}, {"relations", int_matrix_to_json(l.relations())}, {"group", l.to_string()}});
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& m : maps_) maps.push_back(int_matrix_to_json(m));
  return {{"levels", levels}, {"maps", maps}, {"tail", {{"policy", to_string(tail_)}}}};
}

Tower schur_tower(int r, int n0, std::size_t depth, grass::RestrictionKind kind) {
  std::vector<FGAbelian> levels;
  std::vector<IntMatrix> maps;
  for (std::size_t k = 0; k <= depth; ++k) {
    const auto ring = grass::GrassRing::present(r, n0 + static_cast<int>(k));
    levels.emplace_back(ring.rank(), IntMatrix(ring.rank(), 0));
    if (k > 0) {
      const auto lower = grass::GrassRing::present(r, n0 + static_cast<int>(k) - 1);
      maps.push_back(grass::restriction(ring, lower, kind).dense());
    }
  }
  return Tower(std::move(levels), std::move(maps), TailPolicy::FinitePrefixOnly);
}

// ---------------------------------------------------------------- Mittag-Leffler

nlohmann::json MLResult::to_json() const {
  nlohmann::json chains_j = nlohmann::json::array();
  for (const auto& c : chains) {
    nlohmann::json cj{{"level", c.level}, {"step", c.step}, {"images", c.images}};
    cj["stable_at"] = c.stable_at ? nlohmann::json(*c.stable_at) : nlohmann::json(nullptr);
    chains_j.push_back(cj);
  }
  nlohmann::json out{{"status", to_string(status)}, {"reason", reason}, {"chains", chains_j}};
  if (failing_level) out["failing_level"] = *failing_level;
  if (unit_test_value) out["invertible_part_constant"] = unit_test_value->get_str();
  if (status == MLStatus::Certificate) out["lim1"] = "0";
  if (status == MLStatus::Refutation) out["lim1"] = "nonzero";
  return out;
}

MLResult check_mittag_leffler(const Tower& t, std::size_t window) {
  if (window < 1) throw ParameterError("window must be at least 1");
  MLResult res;
  const std::size_t m = t.supplied_levels();
  switch (t.tail()) {
    case TailPolicy::FinitePrefixOnly: {
      for (std::size_t k = 0; k < m; ++k) res.chains.push_back(image_chain(t, k, 1, std::min(window, m - 1 - k)));
      res.status = MLStatus::Inconclusive;
      res.reason = "finite prefix: no data beyond level " + std::to_string(m - 1);
      return res;
    }
    case TailPolicy::EventuallyConstant: {
      for (std::size_t k = 0; k < m; ++k) res.chains.push_back(image_chain(t, k, 1, m - k));
      res.status = MLStatus::Certificate;
      res.reason = "eventually constant with identity maps: every image chain is stable from level " + std::to_string(m - 1);
      return res;
    }
    case TailPolicy::TemplateRepeating: break;
  }
  const std::size_t p = m;
  bool all_finite = true, all_surjective = true, all_stable = true;
  for (std::size_t k = 0; k < p; ++k) {
    all_finite = all_finite && t.level(k).is_finite();
    all_surjective = all_surjective && abelian::is_surjective(t.map(k), t.level(k));
    res.chains.push_back(image_chain(t, k, p, window));
    all_stable = all_stable && res.chains.back().stable_at.has_value();
  }
  res.status = MLStatus::Certificate;
  if (all_finite) {
    res.reason = "every group in the system is finite, so image chains stabilize";
    return res;
  }
  if (all_surjective) {
    res.reason = "every map is surjective";
    return res;
  }
  if (all_stable) {
    res.reason = "image chains stabilize within the window; a stable period map keeps them stable";
    return res;
  }
  for (std::size_t k = 0; k < p; ++k) {
    if (res.chains[k].stable_at) continue;
    const Rat c = invertible_part_constant(t.composite(k, p), t.level(k));
    if (abs(c) != 1) {
      res.status = MLStatus::Refutation;
      res.failing_level = k;
      res.unit_test_value = c;
      res.reason = "image chain at level " + std::to_string(k) + " strictly decreases for " + std::to_string(window) +
                   " periods and the period map has non-unit determinant " + c.get_str() +
                   " on its invertible part, so it decreases forever";
      return res;
    }
  }
  res.reason = "every period map is unimodular on the invertible part of the free quotient and torsion is finite";
  return res;
}

Lim1Certificate certificate_from(const MLResult& r) {
  return {r.status == MLStatus::Certificate, r.reason};
}

// ---------------------------------------------------------------- limits

nlohmann::json SurjectiveLimit::to_json() const {
  return {{"depth", depth},
          {"group", group.to_string()},
          {"generators", group.generators()},
          {"projection", int_matrix_to_json(projection)},
          {"lim1", lim1.valid ? "0" : "unknown"},
          {"statement", statement}};
}

SurjectiveLimit lim_of_surjective(const Tower& t, std::size_t depth) {
  for (std::size_t k = 0; k < depth; ++k)
    if (!abelian::is_surjective(t.map(k), t.level(k)))
      throw ParameterError("map A_" + std::to_string(k + 1) + " → A_" + std::to_string(k) + " is not surjective at level " +
                           std::to_string(k));
  SurjectiveLimit out;
  out.depth = depth;
  out.group = t.level(depth);
  if (depth > 0) out.projection = t.map(depth - 1);
  out.lim1 = {true, "surjective maps through level " + std::to_string(depth)};
  out.statement = "lim surjects onto every level ≤ " + std::to_string(depth) + " and lim¹ = 0 on this range";
  return out;
}

nlohmann::json AssembledElement::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : c) v.push_back(x.get_str());
    comps.push_back(v);
  }
  return {{"depth", depth}, {"components", comps}, {"note", note}};
}

AssembledElement milnor_assemble(const Tower& t, const Lim1Certificate& cert, const std::vector<std::vector<Int>>& elements) {
  if (!cert.valid) throw ParameterError("lim¹ vanishing is not certified");
  if (elements.empty()) throw ParameterError("no elements supplied");
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k].size() != t.level(k).generators())
      throw ParameterError("element at level " + std::to_string(k) + " has the wrong length");
  for (std::size_t k = 0; k + 1 < elements.size(); ++k) {
    std::vector<Int> diff = t.map(k).apply(elements[k + 1]);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= elements[k][i];
    if (!t.level(k).is_zero_vector(diff))
      throw ParameterError("elements are incompatible at level " + std::to_string(k));
  }
  AssembledElement out;
  out.depth = elements.size() - 1;
  out.components = elements;
  out.note = "compatible family; with lim¹ = 0 (" + cert.reason + ") it is the unique limit element through this depth";
  return out;
}

}  // namespace bocalc::towers
