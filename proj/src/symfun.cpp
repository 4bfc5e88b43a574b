#include "bocalc/symfun.hpp"

#include <numeric>

namespace bocalc::symfun {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ParameterError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw ParameterError("partition parts must be weakly decreasing");
  }
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    c.resize(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "∅";
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  // Larger first part comes first within a weight.
  return b.parts_ <=> a.parts_;
}

std::vector<int> generator_weights(int r) {
  std::vector<int> w(static_cast<std::size_t>(r));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

std::vector<std::string> generator_names(int r, const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

namespace {

void box_rec(int rows_left, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (rows_left == 0) return;
  for (int p = 1; p <= max_part; ++p) {
    cur.push_back(p);
    box_rec(rows_left - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_box_partitions(int r, int cols) {
  if (r < 0 || cols < 0) throw ParameterError("box dimensions must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  box_rec(r, cols, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

SymPoly elementary(int i, int r) {
  if (i == 0) return SymPoly(Int(1), static_cast<std::size_t>(r));
  if (i < 0 || i > r) return SymPoly(static_cast<std::size_t>(r));
  return SymPoly::variable(static_cast<std::size_t>(r), static_cast<std::size_t>(i - 1));
}

std::vector<SymPoly> complete_table(int kmax, int r) {
  if (kmax < 0 || r < 0) throw ParameterError("complete_table: negative argument");
  std::vector<SymPoly> h;
  h.reserve(static_cast<std::size_t>(kmax) + 1);
  h.push_back(SymPoly(Int(1), static_cast<std::size_t>(r)));
  for (int k = 1; k <= kmax; ++k) {
    SymPoly hk(static_cast<std::size_t>(r));
    for (int i = 1; i <= std::min(k, r); ++i) {
      SymPoly term = elementary(i, r) * h[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) hk += term;
      else hk -= term;
    }
    h.push_back(std::move(hk));
  }
  return h;
}

SymPoly complete_from_elementary(int k, int r) {
  return complete_table(k, r).back();
}

SymPoly schur_in_elementary(const Partition& lambda, int r) {
  if (r < 0) throw ParameterError("schur_in_elementary: negative generator count");
  const Partition conj = lambda.conjugate();
  const auto m = static_cast<std::size_t>(conj.length());
  if (m == 0) return SymPoly(Int(1), static_cast<std::size_t>(r));
  Matrix<SymPoly> a(m, m, SymPoly(static_cast<std::size_t>(r)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a(i, j) = elementary(conj.part(static_cast<int>(i)) - static_cast<int>(i) + static_cast<int>(j), r);
  SymPoly det = bareiss_determinant(std::move(a));
  if (det.is_zero()) return SymPoly(static_cast<std::size_t>(r));
  return det;
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PresentationError("partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw PresentationError("partition entries must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

}  // namespace bocalc::symfun
