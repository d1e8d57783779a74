#include "hkl/lattice.hpp"

#include <functional>
#include <map>

namespace hkl {

Lattice make_U(const Int& m) {
  IMat g(2, 2);
  g(0, 1) = m;
  g(1, 0) = m;
  std::string name = "U";
  if (m != 1) name += "(" + m.str() + ")";
  return {g, name};
}

Lattice make_A(size_t n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
  IMat g(n, n);
  for (size_t i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) {
      g(i, i + 1) = 1;
      g(i + 1, i) = 1;
    }
  }
  return {g, "A_" + std::to_string(n)};
}

QMat d_euclid_basis(size_t m) {
  if (m < 1) throw std::invalid_argument("D_n needs n >= 1");
  QMat b(m, m);
  if (m == 1) {
    b(0, 0) = 2;  // D_1 = (-4), generated by 2e_1
    return b;
  }
  for (size_t i = 0; i + 1 < m; ++i) {
    b(i, i) = 1;
    b(i, i + 1) = -1;
  }
  b(m - 1, m - 2) = 1;
  b(m - 1, m - 1) = 1;
  return b;
}

Lattice make_D(size_t n) {
  QMat b = d_euclid_basis(n);
  IMat g(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat s = 0;
      for (size_t k = 0; k < n; ++k) s += b(i, k) * b(j, k);
      g(i, j) = -num(s);  // negated Euclidean pairing
    }
  return {g, "D_" + std::to_string(n)};
}

Lattice make_E(size_t r) {
  if (r < 2 || r > 8) throw std::invalid_argument("E_r needs 2 <= r <= 8");
  // ambient (1)+(-1)^r; basis v_1 = e_0 + e_1 + 2 e_2, v_i = e_{i-1} - e_i
  QMat b(r, r + 1);
  b(0, 0) = 1;
  b(0, 1) = 1;
  b(0, 2) = 2;
  for (size_t i = 1; i < r; ++i) {
    b(i, i) = 1;
    b(i, i + 1) = -1;
  }
  IMat g(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      Rat s = b(i, 0) * b(j, 0);
      for (size_t k = 1; k <= r; ++k) s -= b(i, k) * b(j, k);
      g(i, j) = num(s);
    }
  return {g, "E_" + std::to_string(r)};
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  size_t n = a.rank(), m = b.rank();
  IMat g(n + m, n + m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g(i, j) = a.gram(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram(i, j);
  std::string name = a.name.empty() || b.name.empty()
                         ? std::string()
                         : a.name + "+" + b.name;
  return {g, name};
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  Lattice acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

Lattice rescale(const Lattice& l, const Int& m) {
  if (m == 0) throw std::invalid_argument("rescale by zero");
  Lattice out = l;
  for (Int& x : out.gram.a) x *= m;
  if (!out.name.empty()) out.name += "(" + m.str() + ")";
  return out;
}

Lattice make_II(size_t p, size_t q) {
  if (q < p || (q - p) % 8 != 0)
    throw std::invalid_argument("II_{p,q} needs q >= p and q == p mod 8");
  if (p == 0) throw std::invalid_argument("II_{p,q} needs p >= 1 here");
  std::vector<Lattice> parts;
  for (size_t i = 0; i < p; ++i) parts.push_back(make_U());
  for (size_t i = 0; i < (q - p) / 8; ++i) parts.push_back(make_E(8));
  Lattice out = direct_sum(parts);
  out.name = "II_{" + std::to_string(p) + "," + std::to_string(q) + "}";
  return out;
}

Lattice standard(const std::string& name) {
  auto bad = [&]() -> Lattice {
    throw std::invalid_argument("unknown lattice name: " + name);
  };
  if (name == "U") return make_U();
  if (name.rfind("U(", 0) == 0 && name.back() == ')') {
    Int m(name.substr(2, name.size() - 3));
    return make_U(m);
  }
  auto tail_int = [&](size_t pos, size_t end) -> long {
    return std::stol(name.substr(pos, end - pos));
  };
  if (name.size() > 2 && (name[1] == '_' || name[1] == '(')) {
    size_t end = name[1] == '(' ? name.size() - 1 : name.size();
    if (name[1] == '(' && name.back() != ')') return bad();
    long n = tail_int(2, end);
    if (n < 1) return bad();
    switch (name[0]) {
      case 'A': return make_A((size_t)n);
      case 'D': return make_D((size_t)n);
      case 'E': return make_E((size_t)n);
      default: return bad();
    }
  }
  if (name.rfind("II", 0) == 0 && name.size() > 4) {
    std::string body = name.substr(2);
    if (body.size() > 2 && body.front() == '_' &&
        (body[1] == '{' || body[1] == '('))
      body = body.substr(1);  // II_{p,q} -> {p,q}, matching make_II's names
    if ((body.front() == '{' || body.front() == '(') &&
        (body.back() == '}' || body.back() == ')')) {
      body = body.substr(1, body.size() - 2);
      size_t comma = body.find(',');
      if (comma == std::string::npos) return bad();
      long p = std::stol(body.substr(0, comma));
      long qq = std::stol(body.substr(comma + 1));
      if (p < 1 || qq < p) return bad();
      return make_II((size_t)p, (size_t)qq);
    }
    if (body.front() == '_' && body.size() > 1) {
      // II_{p,q} already handled; accept II_p_q as well
      size_t second = body.find('_', 1);
      if (second == std::string::npos) return bad();
      long p = std::stol(body.substr(1, second - 1));
      long qq = std::stol(body.substr(second + 1));
      if (p < 1 || qq < p) return bad();
      return make_II((size_t)p, (size_t)qq);
    }
  }
  return bad();
}

Int norm_of(const Lattice& l, const IVec& v) { return pair_of(l, v, v); }

Int pair_of(const Lattice& l, const IVec& v, const IVec& w) {
  size_t n = l.rank();
  if (v.size() != n || w.size() != n)
    throw std::invalid_argument("vector length mismatch");
  Int s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    Int row = 0;
    for (size_t j = 0; j < n; ++j) row += l.gram(i, j) * w[j];
    s += v[i] * row;
  }
  return s;
}

bool is_primitive(const IVec& v) { return gcd_vec(v) == 1; }

Int divisibility(const Lattice& l, const IVec& v) {
  if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
    throw std::invalid_argument("zero vector");
  if (l.det() == 0) throw std::domain_error("degenerate lattice");
  size_t n = l.rank();
  IVec pairings(n);
  for (size_t j = 0; j < n; ++j) {
    Int s = 0;
    for (size_t i = 0; i < n; ++i) s += l.gram(j, i) * v[i];
    pairings[j] = s;
  }
  return gcd_vec(pairings);
}

// --- discriminant form ---------------------------------------------------

bool FiniteQuadraticForm::is_zero(const Elem& e) const {
  Elem r = reduce(e);
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

FiniteQuadraticForm::Elem FiniteQuadraticForm::reduce(Elem e) const {
  if (e.size() != orders.size())
    throw std::invalid_argument("element size mismatch");
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] %= orders[i];
    if (e[i] < 0) e[i] += orders[i];
  }
  return e;
}

FiniteQuadraticForm::Elem FiniteQuadraticForm::add(const Elem& a,
                                                   const Elem& b) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(r);
}

FiniteQuadraticForm::Elem FiniteQuadraticForm::neg(const Elem& a) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(r);
}

FiniteQuadraticForm::Elem FiniteQuadraticForm::scale(const Elem& a,
                                                     const Int& k) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return reduce(r);
}

FiniteQuadraticForm::Elem FiniteQuadraticForm::class_of_dual(
    const QVec& x) const {
  size_t n = gram.rows;
  if (x.size() != n) throw std::invalid_argument("dual vector length mismatch");
  // dual coordinates: pairings with the lattice basis
  std::vector<Rat> y(n);
  for (size_t i = 0; i < n; ++i) {
    Rat s = 0;
    for (size_t j = 0; j < n; ++j) s += Rat(gram(i, j)) * x[j];
    y[i] = s;
  }
  IVec yi(n);
  for (size_t i = 0; i < n; ++i) {
    if (den(y[i]) != 1)
      throw std::invalid_argument("vector is not in the dual lattice");
    yi[i] = num(y[i]);
  }
  Elem e;
  for (size_t i = 0; i < n; ++i) {
    if (diag[i] == 1) continue;
    Int c = 0;
    for (size_t j = 0; j < n; ++j) c += u_transform(i, j) * yi[j];
    e.push_back(c);
  }
  return reduce(e);
}

QVec FiniteQuadraticForm::lift(const Elem& e) const {
  size_t n = gram.rows;
  QVec x(n, Rat(0));
  for (size_t k = 0; k < orders.size(); ++k)
    for (size_t j = 0; j < n; ++j) x[j] += Rat(e[k]) * lifts(k, j);
  return x;
}

Rat FiniteQuadraticForm::q(const Elem& e) const {
  QVec x = lift(reduce(e));
  Rat s = 0;
  size_t n = gram.rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s += x[i] * Rat(gram(i, j)) * x[j];
  // normalize to [0, 2)
  Rat t = s - 2 * floor_rat(s / 2);
  return t;
}

Rat FiniteQuadraticForm::b(const Elem& a, const Elem& b2) const {
  QVec x = lift(reduce(a)), y = lift(reduce(b2));
  Rat s = 0;
  size_t n = gram.rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s += x[i] * Rat(gram(i, j)) * y[j];
  return s - floor_rat(s);
}

std::vector<FiniteQuadraticForm::Elem> FiniteQuadraticForm::elements() const {
  std::vector<Elem> out;
  Elem cur = zero();
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == orders.size()) {
      out.push_back(cur);
      return;
    }
    for (Int v = 0; v < orders[k]; ++v) {
      cur[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

FiniteQuadraticForm discriminant_group(const Lattice& l) {
  if (l.det() == 0) throw std::domain_error("degenerate lattice");
  SmithResult s = smith_normal_form(l.gram);
  size_t n = l.rank();
  FiniteQuadraticForm fqf;
  fqf.gram = l.gram;
  fqf.u_transform = s.u;
  fqf.diag.resize(n);
  for (size_t i = 0; i < n; ++i) fqf.diag[i] = s.d(i, i);
  std::vector<size_t> idx;
  for (size_t i = 0; i < n; ++i)
    if (fqf.diag[i] != 1) {
      fqf.orders.push_back(fqf.diag[i]);
      idx.push_back(i);
    }
  // generator lift for factor i: solve gram * x = u^{-1} e_i, i.e.
  // (u * gram) * x = e_i
  QMat ug = to_rational(mat_mul(s.u, l.gram));
  fqf.lifts = QMat(idx.size(), n);
  for (size_t k = 0; k < idx.size(); ++k) {
    std::vector<Rat> rhs(n, Rat(0));
    rhs[idx[k]] = 1;
    std::vector<Rat> x = solve_rational(ug, rhs);
    for (size_t j = 0; j < n; ++j) fqf.lifts(k, j) = x[j];
  }
  return fqf;
}

FiniteQuadraticForm::Elem disc_class(const Lattice& l,
                                     const FiniteQuadraticForm& fqf,
                                     const IVec& v) {
  if (!is_primitive(v)) throw std::invalid_argument("vector not primitive");
  Int d = divisibility(l, v);
  QVec x(v.size());
  for (size_t i = 0; i < v.size(); ++i) x[i] = Rat(v[i], d);
  return fqf.class_of_dual(x);
}

// --- enumeration ---------------------------------------------------------

namespace {

// exact pairwise (Lagrange-style) reduction of a positive definite integer
// gram matrix; tightens enumeration bounds for skewed bases.  Returns the
// unimodular row transform t with q_new = t q_old t^T.  Terminates because
// every step strictly decreases a diagonal entry; bails out if the form
// turns out not to be positive definite (the caller's LDL reports that).
IMat reduce_gram(IMat& q) {
  size_t n = q.rows;
  IMat t = IMat::identity(n);
  for (size_t i = 0; i < n; ++i)
    if (q(i, i) <= 0) return t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Int mu = floor_div(2 * q(i, j) + q(i, i), 2 * q(i, i));
        if (mu == 0) continue;
        Int newjj = q(j, j) - 2 * mu * q(i, j) + mu * mu * q(i, i);
        if (newjj >= q(j, j)) continue;
        if (newjj <= 0) return t;
        for (size_t k = 0; k < n; ++k) t(j, k) -= mu * t(i, k);
        for (size_t k = 0; k < n; ++k) q(j, k) -= mu * q(i, k);
        for (size_t k = 0; k < n; ++k) q(k, j) -= mu * q(k, i);
        changed = true;
      }
  }
  return t;
}

}  // namespace

std::vector<IVec> short_vectors(const Lattice& l, const Int& target) {
  if (target >= 0) throw std::invalid_argument("norm must be negative");
  size_t n = l.rank();
  IMat q(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q(i, j) = -l.gram(i, j);
  IMat t = reduce_gram(q);
  // diagonalize Q = -gram: Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
  QMat w(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) w(i, j) = Rat(q(i, j));
  std::vector<Rat> d(n);
  QMat u = QMat::identity(n);
  for (size_t i = 0; i < n; ++i) {
    d[i] = w(i, i);
    if (d[i] <= 0) throw std::domain_error("enumeration requires definite lattice");
    for (size_t j = i + 1; j < n; ++j) u(i, j) = w(i, j) / d[i];
    for (size_t k = i + 1; k < n; ++k)
      for (size_t j = k; j < n; ++j) {
        Rat t = w(k, j) - w(i, k) * w(i, j) / d[i];
        w(k, j) = t;
        w(j, k) = t;
      }
  }

  Rat budget = Rat(-target);
  std::vector<IVec> out;
  IVec x(n, Int(0));
  std::function<void(size_t, const Rat&)> rec = [&](size_t lvl, const Rat& rem) {
    size_t i = lvl - 1;
    Rat c = 0;
    for (size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) c += u(i, j) * Rat(x[j]);
    Rat bound = rem / d[i];
    Int hi = floor_sqrt_minus(bound, c);
    Int lo = -floor_sqrt_minus(bound, -c);
    for (Int v = lo; v <= hi; ++v) {
      x[i] = v;
      Rat term = (Rat(v) + c);
      Rat nrem = rem - d[i] * term * term;
      if (nrem < 0) continue;
      if (i == 0) {
        if (nrem == 0 &&
            !std::all_of(x.begin(), x.end(),
                         [](const Int& e) { return e == 0; })) {
          // map from the reduced basis back to the caller's coordinates
          IVec orig(n, Int(0));
          for (size_t a = 0; a < n; ++a) {
            if (x[a] == 0) continue;
            for (size_t b = 0; b < n; ++b) orig[b] += x[a] * t(a, b);
          }
          out.push_back(orig);
        }
      } else {
        rec(i, nrem);
      }
    }
    x[i] = 0;
  };
  if (n > 0) rec(n, budget);
  std::sort(out.begin(), out.end());
  return out;
}

// --- sublattices ----------------------------------------------------------

Sublattice saturation(const Sublattice& s) {
  if (s.ambient.det() == 0) throw std::domain_error("degenerate lattice");
  IMat h = hermite_row_basis(s.basis);
  if (h.rows != s.basis.rows)
    throw std::invalid_argument("sublattice basis is not independent");
  return {s.ambient, saturate_rows(s.basis)};
}

Lattice lattice_of_rows(const Lattice& ambient, const IMat& rows,
                        const std::string& name) {
  size_t k = rows.rows, n = ambient.rank();
  if (rows.cols != n) throw std::invalid_argument("row length mismatch");
  IMat g(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Int s = 0;
      for (size_t a = 0; a < n; ++a)
        for (size_t b2 = 0; b2 < n; ++b2)
          s += rows(i, a) * ambient.gram(a, b2) * rows(j, b2);
      g(i, j) = s;
    }
  return {g, name};
}

IMat orthogonal_complement_rows(const Lattice& ambient, const IMat& rows) {
  IMat pg = mat_mul(rows, ambient.gram);  // k x n, x in perp iff pg * x = 0
  return hermite_row_basis(integer_kernel(pg));
}

// --- gluing ----------------------------------------------------------------

GluedLattice glue(const Lattice& l, const std::vector<QVec>& glue_vectors) {
  size_t n = l.rank(), g = glue_vectors.size();
  Int scale = 1;
  for (const QVec& v : glue_vectors) {
    if (v.size() != n) throw std::invalid_argument("glue vector length mismatch");
    for (const Rat& x : v)
      scale = scale / boost::multiprecision::gcd(scale, den(x)) * den(x);
  }
  IMat m(n + g, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = scale;
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat t = glue_vectors[i][j] * Rat(scale);
      m(n + i, j) = num(t);
    }
  IMat h = hermite_row_basis(m);
  if (h.rows != n) throw std::invalid_argument("glued span is not full rank");
  QMat p(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) p(i, j) = Rat(h(i, j), scale);
  // new gram = p * gram * p^T, must be integral and even
  QMat pg = mat_mul(p, to_rational(l.gram));
  QMat gq = mat_mul(pg, transpose(p));
  IMat gnew;
  try {
    gnew = to_integer(gq, "overlattice Gram");
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "glue vectors do not generate an integral overlattice");
  }
  for (size_t i = 0; i < n; ++i)
    if (gnew(i, i) % 2 != 0)
      throw std::invalid_argument(
          "glue vectors do not generate an even overlattice");
  QMat old_in_new = inverse_rational(p);
  for (const Rat& x : old_in_new.a)
    if (den(x) != 1)
      throw std::logic_error("overlattice does not contain the base lattice");
  return {{gnew, l.name.empty() ? "" : l.name + "^"}, p, old_in_new};
}

// --- D_n Euclidean helpers --------------------------------------------------

IVec d_from_euclidean(size_t m, const QVec& euclid) {
  if (euclid.size() != m) throw std::invalid_argument("length mismatch");
  QMat b = d_euclid_basis(m);
  // solve c * b = euclid for row vector c, i.e. b^T c^T = euclid^T
  std::vector<Rat> c = solve_rational(transpose(b), euclid);
  IVec out(m);
  for (size_t i = 0; i < m; ++i) {
    if (den(c[i]) != 1)
      throw std::invalid_argument("vector is not in the D lattice");
    out[i] = num(c[i]);
  }
  return out;
}

QVec d_to_euclidean(size_t m, const QVec& coords) {
  if (coords.size() != m) throw std::invalid_argument("length mismatch");
  QMat b = d_euclid_basis(m);
  QVec out(m, Rat(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) out[j] += coords[i] * b(i, j);
  return out;
}

}  // namespace hkl
