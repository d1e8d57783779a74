#include "hkl/dtower.hpp"

namespace hkl {

std::string to_string(VectorKind k) {
  switch (k) {
    case VectorKind::nodal: return "nodal";
    case VectorKind::hyperelliptic: return "hyperelliptic";
    case VectorKind::unigonal: return "unigonal";
    case VectorKind::other: return "other";
  }
  throw std::logic_error("unreachable");
}

int unigonal_parameter(int N) { return ((N - 2) % 8 + 8) % 8; }

IVec DecoratedDLattice::from_d_euclidean(const QVec& euclid) const {
  size_t m = (size_t)(N - 2);
  IVec dpart = d_from_euclidean(m, euclid);
  IVec v(4 + m, Int(0));
  for (size_t i = 0; i < m; ++i) v[4 + i] = dpart[i];
  return v;
}

namespace {

// discriminant class of a D-factor dual vector given in Euclidean coords
FiniteQuadraticForm::Elem d_factor_class(const DecoratedDLattice& d,
                                         const QVec& euclid) {
  size_t m = (size_t)(d.N - 2);
  QMat b = d_euclid_basis(m);
  std::vector<Rat> c = solve_rational(transpose(b), euclid);
  QVec full(4 + m, Rat(0));
  for (size_t i = 0; i < m; ++i) full[4 + i] = c[i];
  return d.fqf.class_of_dual(full);
}

}  // namespace

DecoratedDLattice make_dlattice(int N) {
  if (N < 3) throw std::invalid_argument("decorated lattice needs N >= 3");
  size_t m = (size_t)(N - 2);
  DecoratedDLattice d;
  d.N = N;
  d.lattice = direct_sum({make_U(), make_U(), make_D(m)});
  d.lattice.name = "U+U+D_" + std::to_string(m);
  d.fqf = discriminant_group(d.lattice);

  QVec alpha(m, Rat(1, 2)), beta(m, Rat(1, 2)), xivec(m, Rat(0));
  beta[0] = Rat(-1, 2);
  xivec[0] = 1;
  d.zeta = d_factor_class(d, alpha);
  d.zeta_prime = d_factor_class(d, beta);
  d.xi = d_factor_class(d, xivec);
  d.decoration = d.xi;
  if (N % 8 == 6) {
    d.decoration_note =
        "three classes of square 1; decoration fixed to the class of "
        "(1,0,...,0) in the D factor";
  } else {
    d.decoration_note = "unique class of square 1";
  }
  return d;
}

VectorKind classify_vector(const DecoratedDLattice& d, const IVec& v) {
  if (!is_primitive(v)) throw std::invalid_argument("vector not primitive");
  Int n2 = norm_of(d.lattice, v);
  if (n2 >= 0)
    throw std::invalid_argument("classification needs negative square");
  Int dv = divisibility(d.lattice, v);
  int a = unigonal_parameter(d.N);

  if (n2 == -2 && dv == 1) return VectorKind::nodal;

  auto cls = [&]() { return disc_class(d.lattice, d.fqf, v); };
  if (n2 == -4 && dv == 2 && cls() == d.decoration)
    return VectorKind::hyperelliptic;

  if (a != 0) {
    if (d.N % 2 == 1 && n2 == -4 * a && dv == 4) return VectorKind::unigonal;
    if (d.N % 2 == 0 && n2 == -a && dv == 2) {
      auto c = cls();
      if (c == d.zeta || c == d.zeta_prime) return VectorKind::unigonal;
    }
  }
  return VectorKind::other;
}

bool is_reflective(const DecoratedDLattice& d, const IVec& v) {
  VectorKind k = classify_vector(d, v);
  if (k == VectorKind::nodal || k == VectorKind::hyperelliptic) return true;
  int r = d.N % 8;
  return k == VectorKind::unigonal && (r == 3 || r == 4);
}

bool reflection_preserves_all(const DecoratedDLattice& d, const IVec& v) {
  size_t n = d.lattice.rank();
  Int n2 = norm_of(d.lattice, v);
  // reflection x -> x - 2 (x,v)/v^2 v must be integral on every basis vector
  for (size_t i = 0; i < n; ++i) {
    IVec e(n, Int(0));
    e[i] = 1;
    Rat f = Rat(2 * pair_of(d.lattice, e, v)) / Rat(n2);
    for (size_t j = 0; j < n; ++j)
      if (den(f * Rat(v[j])) != 1) return false;
  }
  // and must fix the decoration class
  QVec x = d.fqf.lift(d.decoration);
  Rat xv = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      xv += x[i] * Rat(d.lattice.gram(i, j)) * Rat(v[j]);
  QVec img(n);
  Rat f = 2 * xv / Rat(n2);
  for (size_t j = 0; j < n; ++j) img[j] = x[j] - f * Rat(v[j]);
  return d.fqf.class_of_dual(img) == d.decoration;
}

bool eichler_equivalent(const DecoratedDLattice& d, const IVec& v,
                        const IVec& w) {
  if (!is_primitive(v) || !is_primitive(w))
    throw std::invalid_argument("vector not primitive");
  if (norm_of(d.lattice, v) != norm_of(d.lattice, w)) return false;
  auto cv = disc_class(d.lattice, d.fqf, v);
  auto cw = disc_class(d.lattice, d.fqf, w);
  if (cv == cw) return true;
  // the decorated group exchanges zeta and zeta'
  return (cv == d.zeta && cw == d.zeta_prime) ||
         (cv == d.zeta_prime && cw == d.zeta);
}

int tau(int N) {
  int r = ((N % 8) + 8) % 8;
  return (r == 3 || r == 4) ? 1 : 2;
}

DivisorClass boundary_divisor(int N) {
  DivisorClass delta = DivisorClass::zero(SpaceLabel::F(N));
  delta.set("Hh", Rat(1, 2));
  if (tau(N) == 1) delta.set("Hu", Rat(1, 2));
  return delta;
}

IVec nodal_example(const DecoratedDLattice& d) {
  IVec v(d.lattice.rank(), Int(0));
  v[0] = 1;
  v[1] = -1;
  return v;
}

IVec hyperelliptic_example(const DecoratedDLattice& d) {
  size_t m = (size_t)(d.N - 2);
  if (d.N == 3) {
    // D_1 has no square -4 divisibility-2 vector; mix in the U block
    IVec v(5, Int(0));
    v[0] = 2;
    v[4] = 1;
    return v;
  }
  QVec e(m, Rat(0));
  e[0] = 2;
  return d.from_d_euclidean(e);
}

std::optional<IVec> unigonal_example(const DecoratedDLattice& d) {
  int a = unigonal_parameter(d.N);
  if (a == 0) return std::nullopt;
  size_t m = (size_t)(d.N - 2);
  int s = (d.N - 2 - a) / 8;
  int t = s > 0 ? 1 : 0;
  IVec v;
  if (d.N % 2 == 1) {
    QVec e(m, Rat(2));
    v = d.from_d_euclidean(e);
    v[0] = 4 * s;
    v[1] = 4 * t;
  } else {
    QVec e(m, Rat(1));
    v = d.from_d_euclidean(e);
    v[0] = 2 * s;
    v[1] = 2 * t;
  }
  return v;
}

}  // namespace hkl
