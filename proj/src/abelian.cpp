#include "bocalc/abelian.hpp"

#include <algorithm>

namespace bocalc::abelian {

namespace {

void row_add(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += c * m(src, j);
}
void col_add(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += c * m(i, src);
}
void row_neg(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}
Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m, Int(1), Int(0)), a, IntMatrix::identity(n, Int(1), Int(0)), 0};
  IntMatrix& A = s.D;
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!is_zero(A(i, j)) && (!found || abs(A(i, j)) < abs(A(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    A.swap_rows(t, pi);
    s.U.swap_rows(t, pi);
    A.swap_cols(t, pj);
    s.V.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(A(i, t))) continue;
        const Int q = tdiv(A(i, t), A(t, t));
        row_add(A, i, t, -q);
        row_add(s.U, i, t, -q);
        if (!is_zero(A(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (is_zero(A(t, j))) continue;
        const Int q = tdiv(A(t, j), A(t, t));
        col_add(A, j, t, -q);
        col_add(s.V, j, t, -q);
        if (!is_zero(A(t, j))) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it into place.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (!is_zero(A(i, t)) && abs(A(i, t)) < abs(A(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (!is_zero(A(t, j)) && abs(A(t, j)) < abs(A(bi, bj))) bi = t, bj = j;
        A.swap_rows(t, bi);
        s.U.swap_rows(t, bi);
        A.swap_cols(t, bj);
        s.V.swap_cols(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide the rest of the block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(A(t, t), A(i, j))) {
            row_add(A, t, i, Int(1));
            row_add(s.U, t, i, Int(1));
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (sgn(A(t, t)) < 0) {
      row_neg(A, t);
      row_neg(s.U, t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  const std::size_t n = a.cols();
  IntMatrix k(n, n - s.rank, Int(0));
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - s.rank) = s.V(i, j);
  return k;
}

bool in_column_span(const IntMatrix& a, const std::vector<Int>& v) {
  if (v.size() != a.rows()) throw std::invalid_argument("in_column_span: dimension mismatch");
  if (a.cols() == 0) return std::all_of(v.begin(), v.end(), [](const Int& x) { return is_zero(x); });
  const SmithForm s = smith_normal_form(a);
  const std::vector<Int> w = s.U.apply(v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < s.rank) {
      if (!divides(s.D(i, i), w[i])) return false;
    } else if (!is_zero(w[i])) {
      return false;
    }
  }
  return true;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols(), Int(0));
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

FGAbelian::FGAbelian(std::size_t generators, IntMatrix relations) : gens_(generators), rel_(std::move(relations)) {
  if (rel_.rows() != gens_) {
    if (rel_.rows() == 0 && rel_.cols() == 0) rel_ = IntMatrix(gens_, 0, Int(0));
    else throw PresentationError("relation matrix must have one row per generator");
  }
  const SmithForm s = smith_normal_form(rel_);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) torsion_.push_back(s.D(i, i));
  free_rank_ = gens_ - s.rank;
}

FGAbelian FGAbelian::from_orders(const std::vector<Int>& orders) {
  IntMatrix rel(orders.size(), orders.size(), Int(0));
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (sgn(orders[i]) < 0) throw PresentationError("cyclic orders must be nonnegative");
    rel(i, i) = orders[i];
  }
  return FGAbelian(orders.size(), rel);
}

std::optional<Int> FGAbelian::order() const {
  if (free_rank_ != 0) return std::nullopt;
  Int o(1);
  for (const auto& d : torsion_) o *= d;
  return o;
}

bool FGAbelian::is_zero_vector(const std::vector<Int>& v) const { return in_column_span(rel_, v); }

bool FGAbelian::in_subgroup(const IntMatrix& s, const std::vector<Int>& v) const {
  return in_column_span(hconcat(s, rel_), v);
}

bool FGAbelian::subgroup_contains(const IntMatrix& big, const IntMatrix& small) const {
  const IntMatrix span = hconcat(big, rel_);
  for (std::size_t j = 0; j < small.cols(); ++j)
    if (!in_column_span(span, small.column(j))) return false;
  return true;
}

std::string FGAbelian::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  else if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : torsion_) parts.push_back("Z/" + d.get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

nlohmann::json FGAbelian::to_json() const {
  nlohmann::json tors = nlohmann::json::array();
  for (const auto& d : torsion_) tors.push_back(d.get_str());
  return {{"generators", gens_},
          {"relations", int_matrix_to_json(rel_)},
          {"free_rank", free_rank_},
          {"torsion", tors},
          {"structure", to_string()}};
}

bool is_well_defined(const IntMatrix& f, const FGAbelian& src, const FGAbelian& tgt) {
  if (f.rows() != tgt.generators() || f.cols() != src.generators()) return false;
  const IntMatrix img = f * src.relations();
  for (std::size_t j = 0; j < img.cols(); ++j)
    if (!tgt.is_zero_vector(img.column(j))) return false;
  return true;
}

FGAbelian cokernel(const IntMatrix& f, const FGAbelian& tgt) {
  return FGAbelian(tgt.generators(), hconcat(tgt.relations(), f));
}

namespace {

// {x : f x ∈ span(tgt relations)} as generator columns in Z^{src.gens}.
IntMatrix preimage_of_zero(const IntMatrix& f, const FGAbelian& tgt) {
  const IntMatrix k = integer_kernel(hconcat(f, tgt.relations()));
  return k.block(0, 0, f.cols(), k.cols());
}

}  // namespace

FGAbelian image(const IntMatrix& f, const FGAbelian& src, const FGAbelian& tgt) {
  return FGAbelian(src.generators(), hconcat(preimage_of_zero(f, tgt), src.relations()));
}

IntMatrix kernel_generators(const IntMatrix& f, const FGAbelian& /*src*/, const FGAbelian& tgt) {
  return preimage_of_zero(f, tgt);
}

bool is_injective(const IntMatrix& f, const FGAbelian& src, const FGAbelian& tgt) {
  const IntMatrix k = preimage_of_zero(f, tgt);
  for (std::size_t j = 0; j < k.cols(); ++j)
    if (!src.is_zero_vector(k.column(j))) return false;
  return true;
}

bool is_surjective(const IntMatrix& f, const FGAbelian& tgt) { return cokernel(f, tgt).is_trivial(); }

IntMatrix int_matrix_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw PresentationError(where + ": expected an array of rows");
  if (j.empty()) return IntMatrix();
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array()) throw PresentationError(where + "/" + std::to_string(i) + ": expected a row array");
    if (i == 0) cols = j[i].size();
    else if (j[i].size() != cols) throw PresentationError(where + "/" + std::to_string(i) + ": ragged row");
  }
  IntMatrix m(rows, cols, Int(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& x = j[i][k];
      const std::string ptr = where + "/" + std::to_string(i) + "/" + std::to_string(k);
      if (x.is_number_integer()) m(i, k) = Int(x.get<long>());
      else if (x.is_string()) {
        try {
          m(i, k) = parse_int(x.get<std::string>());
        } catch (const PresentationError&) {
          throw PresentationError(ptr + ": not an integer");
        }
      } else {
        throw PresentationError(ptr + ": not an integer");
      }
    }
  return m;
}

nlohmann::json int_matrix_to_json(const IntMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(row);
  }
  return out;
}

}  // namespace bocalc::abelian
