// Even-lattice arithmetic: Gram matrices, divisibility, discriminant forms,
// exact short-vector enumeration, saturation, direct sums, overlattice gluing.
#pragma once

#include "hkl/numeric.hpp"

#include <string>
#include <vector>

namespace hkl {

struct Lattice {
  IMat gram;
  std::string name;

  size_t rank() const { return gram.rows; }
  Int det() const { return det_bareiss(gram); }
  bool is_even() const {
    for (size_t i = 0; i < gram.rows; ++i)
      if (gram(i, i) % 2 != 0) return false;
    return true;
  }
};

// --- constructors ------------------------------------------------------

Lattice make_U(const Int& m = 1);      // [[0,m],[m,0]]
Lattice make_A(size_t n);              // negated A_n Cartan matrix
Lattice make_D(size_t n);              // negated Euclidean form on even-sum vectors
Lattice make_E(size_t r);              // complement of (3,1,...,1) in (1)+(-1)^r, 2<=r<=8
Lattice make_II(size_t p, size_t q);   // U^p + E_8^((q-p)/8), q >= p, q == p mod 8
Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice rescale(const Lattice& l, const Int& m);
// name grammar: U | U(m) | A_n | D_n | E_r | II_{p,q} (also A(n), II(p,q))
Lattice standard(const std::string& name);

// --- vector arithmetic --------------------------------------------------

Int norm_of(const Lattice& l, const IVec& v);
Int pair_of(const Lattice& l, const IVec& v, const IVec& w);
Int divisibility(const Lattice& l, const IVec& v);  // gcd of gram * v
bool is_primitive(const IVec& v);

// --- discriminant form --------------------------------------------------

struct FiniteQuadraticForm {
  using Elem = std::vector<Int>;  // residues, one per entry of `orders`

  std::vector<Int> orders;  // invariant factors > 1, divisibility chain
  QMat lifts;               // row j = lift of generator j into L (x) Q
  IMat gram;                // Gram matrix of the source lattice
  IMat u_transform;         // row transform of the Smith form of gram
  std::vector<Int> diag;    // full Smith diagonal of gram

  Int order() const {
    Int t = 1;
    for (const Int& d : orders) t *= d;
    return t;
  }
  Elem zero() const { return Elem(orders.size(), Int(0)); }
  bool is_zero(const Elem& e) const;
  Elem reduce(Elem e) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(const Elem& a, const Int& k) const;

  // class of a dual vector x in L (x) Q (all pairings with L integral)
  Elem class_of_dual(const QVec& x) const;
  QVec lift(const Elem& e) const;
  Rat q(const Elem& e) const;                   // in [0,2), value mod 2Z
  Rat b(const Elem& a, const Elem& b2) const;   // in [0,1), value mod Z
  std::vector<Elem> elements() const;           // lexicographic order
};

FiniteQuadraticForm discriminant_group(const Lattice& l);
// class of v / divisibility(v); v must be primitive
FiniteQuadraticForm::Elem disc_class(const Lattice& l,
                                     const FiniteQuadraticForm& fqf,
                                     const IVec& v);

// --- enumeration --------------------------------------------------------

// All v with v^2 == norm (norm < 0), lexicographically ordered; needs a
// negative definite lattice.
std::vector<IVec> short_vectors(const Lattice& l, const Int& norm);
inline size_t root_count(const Lattice& l) {
  return short_vectors(l, Int(-2)).size();
}

// --- sublattices --------------------------------------------------------

struct Sublattice {
  Lattice ambient;
  IMat basis;  // rows = basis vectors in ambient coordinates
};

Sublattice saturation(const Sublattice& s);
// Gram matrix of the rows of `basis` under the ambient form
Lattice lattice_of_rows(const Lattice& ambient, const IMat& rows,
                        const std::string& name = "");
// saturated basis of { x : (x, row_i) = 0 for all i }
IMat orthogonal_complement_rows(const Lattice& ambient, const IMat& rows);

// --- gluing -------------------------------------------------------------

struct GluedLattice {
  Lattice lattice;  // the overlattice in its own basis
  QMat new_in_old;  // rows: overlattice basis written in old coordinates
  QMat old_in_new;  // rows: old basis written in overlattice coordinates
};

GluedLattice glue(const Lattice& l, const std::vector<QVec>& glue_vectors);

// --- D_n Euclidean coordinate helpers -----------------------------------

QMat d_euclid_basis(size_t m);  // rows = standard D_m basis in Euclidean coords
// convert a Euclidean-coordinate vector into basis coordinates (must land in D_m)
IVec d_from_euclidean(size_t m, const QVec& euclid);
QVec d_to_euclidean(size_t m, const QVec& coords);

}  // namespace hkl
