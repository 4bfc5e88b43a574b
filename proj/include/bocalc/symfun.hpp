#pragma once

#include <compare>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bocalc/matrix.hpp"
#include "bocalc/polynomial.hpp"

namespace bocalc::symfun {

// Weakly decreasing sequence of positive integers. The empty partition is
// the empty sequence.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long weight() const;
  // λ_i with zero beyond the length (0-based).
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool fits_in_box(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_.front() <= cols);
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Weight first, then lexicographically larger parts first: ∅ < (1) < (2) < (1,1) < (3) < ...
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

// Symmetric polynomial written in the generators e_1..e_r (variable i-1 is
// e_i), integer coefficients, weight grading deg(e_i) = i.
using SymPoly = IntPoly;

std::vector<int> generator_weights(int r);
std::vector<std::string> generator_names(int r, const std::string& stem = "e");

// All partitions with at most r parts and parts at most cols, in Partition order.
std::vector<Partition> enumerate_box_partitions(int r, int cols);

// e_i as a SymPoly in r generators (1 for i == 0, 0 outside 0..r).
SymPoly elementary(int i, int r);

// h_k through the recurrence h_k = sum_{i>=1} (-1)^{i+1} e_i h_{k-i}, h_0 = 1.
SymPoly complete_from_elementary(int k, int r);
// h_0..h_kmax in one pass.
std::vector<SymPoly> complete_table(int kmax, int r);

// s_λ = det(e_{λ'_i - i + j}) (dual Jacobi-Trudi), e_i = 0 for i > r.
SymPoly schur_in_elementary(const Partition& lambda, int r);

// Fraction-free (Bareiss) determinant over a polynomial ring.
template <class C>
Polynomial<C> bareiss_determinant(Matrix<Polynomial<C>> m);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace bocalc::symfun

namespace bocalc {

// Polynomial as [{exponents:[...], coeff:"..."}] in grlex order, largest first.
template <class C>
nlohmann::json poly_to_json(const Polynomial<C>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exps.push_back(i < e.size() ? e[i] : 0);
    out.push_back({{"exponents", exps}, {"coeff", coeff_str(c)}});
  }
  return out;
}

}  // namespace bocalc

namespace bocalc::symfun {

template <class C>
Polynomial<C> bareiss_determinant(Matrix<Polynomial<C>> m) {
  if (!m.square()) throw std::invalid_argument("bareiss_determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial<C>(C(1));
  bool negate = false;
  Polynomial<C> prev(C(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Polynomial<C>();
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial<C> num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = divide_exact(std::move(num), prev);
        if (!q) throw std::logic_error("bareiss_determinant: inexact division");
        m(i, j) = std::move(*q);
      }
      m(i, k) = Polynomial<C>();
    }
    prev = m(k, k);
  }
  Polynomial<C> det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace bocalc::symfun
