#pragma once

// Brute-force reference computations used only by the tests. They share no
// code paths with the library routines they check.

#include <functional>
#include <vector>

#include "bocalc/polynomial.hpp"
#include "bocalc/symfun.hpp"

namespace oracle {

using bocalc::Exponents;
using bocalc::Int;
using bocalc::IntPoly;

// e_i(x_1..x_r) by enumerating i-subsets.
inline IntPoly elementary_in_vars(int i, int r) {
  IntPoly out(static_cast<std::size_t>(r));
  if (i < 0 || i > r) return out;
  std::vector<int> pick(static_cast<std::size_t>(r), 0);
  std::fill(pick.begin(), pick.begin() + i, 1);
  std::sort(pick.begin(), pick.end());
  do {
    Exponents e(pick.begin(), pick.end());
    out.add_term(e, Int(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// s_λ(x_1..x_r) as the sum of x^T over semistandard tableaux T of shape λ
// with entries in 1..r.
inline IntPoly schur_by_tableaux(const bocalc::symfun::Partition& lambda, int r) {
  IntPoly out(static_cast<std::size_t>(r));
  const auto& parts = lambda.parts();
  std::vector<std::vector<int>> t;
  for (int p : parts) t.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(parts[i]); ++j) cells.emplace_back(i, j);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      Exponents e(static_cast<std::size_t>(r), 0);
      for (const auto& row : t)
        for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
      out.add_term(e, Int(1));
      return;
    }
    const auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= r; ++v) {
      t[i][j] = v;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

// Polynomial in e_1..e_m rewritten in x_1..x_r via e_i -> e_i(x).
inline IntPoly e_to_vars(const IntPoly& p, int r) {
  std::vector<IntPoly> images;
  for (std::size_t i = 1; i <= std::max<std::size_t>(p.nvars(), 1); ++i)
    images.push_back(elementary_in_vars(static_cast<int>(i), r));
  return p.substitute(images, static_cast<std::size_t>(r));
}

// All partitions of weight w.
inline std::vector<bocalc::symfun::Partition> partitions_of(int w) {
  std::vector<bocalc::symfun::Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(w, w);
  return out;
}

}  // namespace oracle

namespace oracle {

// Rank of a rational matrix by plain Gaussian elimination.
inline std::size_t rank_rat(std::vector<std::vector<bocalc::Rat>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || sgn(m[i][c]) == 0) continue;
      const bocalc::Rat f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// e-monomials in r generators of weight exactly w.
inline std::vector<Exponents> weighted_monomials(int r, int w) {
  std::vector<Exponents> out;
  Exponents cur(static_cast<std::size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int a = 0; a * (i + 1) <= left; ++a) {
      cur[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a * (i + 1));
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, w);
  return out;
}

}  // namespace oracle
