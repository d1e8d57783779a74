// Exact integer/rational linear algebra used by every module: matrices over
// cpp_int / cpp_rational, Smith and Hermite normal forms with transforms,
// integer kernels (always saturated), Bareiss determinants, rational solving.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int floor_div(const Int& a, const Int& b) {
  // b != 0; rounds toward -infinity
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

// largest integer s >= 0 with s*s <= n (n >= 0)
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  if (n == 0) return 0;
  Int x = Int(1) << (unsigned)(boost::multiprecision::msb(n) / 2 + 1);
  while (true) {
    Int y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

// largest integer t with t <= sqrt(b) - c, i.e. (t + c)^2 <= b when t + c >= 0.
// Used for exact enumeration bounds; b >= 0 rational, c rational.
inline Int floor_sqrt_minus(const Rat& b, const Rat& c) {
  // initial guess via isqrt of floor(b * den(c)^2-free scaled value)
  Int p = num(b), q = den(b);
  Int s = isqrt(p * q);  // s/q <= sqrt(b) < (s+1)/q
  Int t = floor_rat(Rat(s, q) - c);
  auto ok = [&](const Int& v) {
    Rat vv = Rat(v) + c;
    if (vv < 0) return true;  // on the left side of the parabola's vertex
    return vv * vv <= b;
  };
  while (ok(t + 1)) ++t;
  while (!ok(t)) --t;
  return t;
}

template <class T>
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  std::vector<T> row(size_t i) const {
    return std::vector<T>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }

  void swap_rows(size_t i, size_t j) {
    for (size_t k = 0; k < cols; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(size_t i, size_t j) {
    for (size_t k = 0; k < rows; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row_i += f * row_j
  void add_row(size_t i, size_t j, const T& f) {
    for (size_t k = 0; k < cols; ++k) (*this)(i, k) += f * (*this)(j, k);
  }
  void add_col(size_t i, size_t j, const T& f) {
    for (size_t k = 0; k < rows; ++k) (*this)(k, i) += f * (*this)(k, j);
  }
  void scale_row(size_t i, const T& f) {
    for (size_t k = 0; k < cols; ++k) (*this)(i, k) *= f;
  }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul shape mismatch");
  Mat<T> z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const T& f = x(i, k);
      if (f == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) z(i, j) += f * y(k, j);
    }
  return z;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
  Mat<T> z(x.cols, x.rows);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) z(j, i) = x(i, j);
  return z;
}

inline QMat to_rational(const IMat& m) {
  QMat q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

// Throws unless every entry is an integer.
inline IMat to_integer(const QMat& m, const char* what = "matrix") {
  IMat z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (den(m.a[i]) != 1)
      throw std::invalid_argument(std::string(what) + " has non-integer entry");
    z.a[i] = num(m.a[i]);
  }
  return z;
}

// Fraction-free determinant (Bareiss). Square matrices only.
inline Int det_bareiss(IMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  size_t n = m.rows;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithResult {
  IMat u, d, v;  // u * input * v == d, u and v unimodular, d diagonal
};

// Smith normal form with nonnegative diagonal and divisibility chain.
inline SmithResult smith_normal_form(const IMat& input) {
  IMat d = input;
  IMat u = IMat::identity(d.rows);
  IMat v = IMat::identity(d.cols);
  size_t n = std::min(d.rows, d.cols);

  for (size_t t = 0; t < n; ++t) {
  restart:
    // find pivot: nonzero entry of smallest magnitude in the lower-right block
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < d.rows; ++i)
      for (size_t j = t; j < d.cols; ++j)
        if (d(i, j) != 0 &&
            (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i; pj = j; found = true;
        }
    if (!found) break;
    if (pi != t) { d.swap_rows(t, pi); u.swap_rows(t, pi); }
    if (pj != t) { d.swap_cols(t, pj); v.swap_cols(t, pj); }

    for (size_t i = t + 1; i < d.rows; ++i) {
      if (d(i, t) == 0) continue;
      Int f = -floor_div(d(i, t), d(t, t));
      if (f != 0) { d.add_row(i, t, f); u.add_row(i, t, f); }
      if (d(i, t) != 0) goto restart;  // remainder becomes the smaller pivot
    }
    for (size_t j = t + 1; j < d.cols; ++j) {
      if (d(t, j) == 0) continue;
      Int f = -floor_div(d(t, j), d(t, t));
      if (f != 0) { d.add_col(j, t, f); v.add_col(j, t, f); }
      if (d(t, j) != 0) goto restart;
    }
    // divisibility fix-up: pivot must divide the rest of the block
    for (size_t i = t + 1; i < d.rows; ++i)
      for (size_t j = t + 1; j < d.cols; ++j)
        if (d(i, j) % d(t, t) != 0) {
          d.add_row(t, i, Int(1));
          u.add_row(t, i, Int(1));
          goto restart;
        }
  }
  for (size_t t = 0; t < n; ++t)
    if (d(t, t) < 0) {
      d.scale_row(t, Int(-1));
      u.scale_row(t, Int(-1));
    }
  return {u, d, v};
}

// Canonical basis (row-style Hermite form) of the row span over Z.
// Returns an r x cols matrix, r = rank; pivots positive, entries above a pivot
// reduced to [0, pivot).
inline IMat hermite_row_basis(IMat m) {
  size_t r = 0;
  for (size_t j = 0; j < m.cols && r < m.rows; ++j) {
    // gcd-reduce column j among rows >= r
    while (true) {
      size_t p = m.rows;
      for (size_t i = r; i < m.rows; ++i)
        if (m(i, j) != 0 && (p == m.rows || abs(m(i, j)) < abs(m(p, j)))) p = i;
      if (p == m.rows) break;  // column is zero below r
      if (p != r) m.swap_rows(r, p);
      bool clean = true;
      for (size_t i = r + 1; i < m.rows; ++i)
        if (m(i, j) != 0) {
          m.add_row(i, r, -floor_div(m(i, j), m(r, j)));
          if (m(i, j) != 0) clean = false;
        }
      if (clean) break;
    }
    if (m(r, j) == 0) continue;
    if (m(r, j) < 0) m.scale_row(r, Int(-1));
    for (size_t i = 0; i < r; ++i) {
      Int f = -floor_div(m(i, j), m(r, j));
      if (f != 0) m.add_row(i, r, f);
    }
    ++r;
  }
  IMat out(r, m.cols);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  return out;
}

// Basis (rows) of { x in Z^cols : m * x = 0 }. Saturated by construction.
inline IMat integer_kernel(const IMat& m) {
  SmithResult s = smith_normal_form(m);
  size_t n = std::min(s.d.rows, s.d.cols), rank = 0;
  for (size_t i = 0; i < n; ++i)
    if (s.d(i, i) != 0) ++rank;
  IMat out(m.cols - rank, m.cols);
  for (size_t k = rank; k < m.cols; ++k)
    for (size_t i = 0; i < m.cols; ++i) out(k - rank, i) = s.v(i, k);
  return out;
}

// Saturation of the subgroup generated by the rows of b inside Z^cols:
// all integer vectors lying in the rational row span.
inline IMat saturate_rows(const IMat& b) {
  return hermite_row_basis(integer_kernel(integer_kernel(b)));
}

// Solve a * x = rhs over the rationals (a square nonsingular).
inline std::vector<Rat> solve_rational(QMat a, std::vector<Rat> rhs) {
  if (a.rows != a.cols || a.rows != rhs.size())
    throw std::invalid_argument("solve_rational shape mismatch");
  size_t n = a.rows;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("solve_rational: singular matrix");
    if (p != k) { a.swap_rows(k, p); std::swap(rhs[k], rhs[p]); }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / a(i, i);
  return x;
}

inline QMat inverse_rational(const QMat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse of non-square");
  size_t n = a.rows;
  QMat w = a, inv = QMat::identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && w(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("inverse_rational: singular matrix");
    if (p != k) { w.swap_rows(k, p); inv.swap_rows(k, p); }
    Rat piv = w(k, k);
    for (size_t j = 0; j < n; ++j) { w(k, j) /= piv; inv(k, j) /= piv; }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0) continue;
      Rat f = w(i, k);
      for (size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

inline Int gcd_vec(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

inline std::string rat_to_string(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

}  // namespace hkl
