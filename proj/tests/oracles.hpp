// Brute-force reference implementations used to cross-check the exact
// kernels from an independent angle.  Deliberately naive; keep ranks small.
#pragma once

#include <algorithm>
#include <vector>

#include "hkl/lattice.hpp"

namespace hkl::oracles {

// all v != 0 with v^2 == norm in a negative definite lattice, by scanning
// the dual box |x_i| <= sqrt(|norm| * (Q^-1)_ii); practical for rank <= 6
inline std::vector<IVec> box_short_vectors(const Lattice& l, const Int& norm) {
  size_t n = l.rank();
  QMat q(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q(i, j) = Rat(-l.gram(i, j));
  QMat inv = inverse_rational(q);
  std::vector<Int> bound(n);
  for (size_t i = 0; i < n; ++i)
    bound[i] = isqrt(floor_rat(Rat(-norm) * inv(i, i)));
  std::vector<IVec> out;
  IVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    bool zero = true;
    for (const Int& c : x) zero &= c == 0;
    if (!zero && norm_of(l, x) == norm) out.push_back(x);
    size_t i = 0;
    while (i < n && x[i] == bound[i]) x[i++] = -bound[i];
    if (i == n) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline size_t matrix_rank(const IMat& m) {
  SmithResult s = smith_normal_form(m);
  size_t r = 0;
  for (size_t i = 0; i < std::min(s.d.rows, s.d.cols); ++i)
    if (s.d(i, i) != 0) ++r;
  return r;
}

// is x in the rational span of the rows?
inline bool in_rational_span(const IMat& rows, const IVec& x) {
  IMat ext(rows.rows + 1, rows.cols);
  for (size_t i = 0; i < rows.rows; ++i)
    for (size_t j = 0; j < rows.cols; ++j) ext(i, j) = rows(i, j);
  for (size_t j = 0; j < rows.cols; ++j) ext(rows.rows, j) = x[j];
  return matrix_rank(ext) == matrix_rank(rows);
}

}  // namespace hkl::oracles
