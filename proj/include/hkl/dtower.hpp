// The decorated rank-(N+2) lattices U^2 + D_{N-2}: named discriminant classes
// {0, xi, zeta, zeta'}, vector-kind classification, reflectivity, Eichler
// invariants, tau(N), and the boundary class Delta(N).
#pragma once

#include "hkl/classes.hpp"
#include "hkl/lattice.hpp"

#include <optional>
#include <string>

namespace hkl {

enum class VectorKind { nodal, hyperelliptic, unigonal, other };

std::string to_string(VectorKind k);

struct DecoratedDLattice {
  int N;
  Lattice lattice;  // blocks: U, U, D_{N-2}
  FiniteQuadraticForm fqf;
  FiniteQuadraticForm::Elem xi, zeta, zeta_prime;
  FiniteQuadraticForm::Elem decoration;  // defaults to xi
  std::string decoration_note;

  // full-lattice coordinates of a vector given in the Euclidean coordinates
  // of the D factor
  IVec from_d_euclidean(const QVec& euclid) const;
};

DecoratedDLattice make_dlattice(int N);

// (N-2) mod 8; the unigonal square/divisibility parameter (0 = no unigonal kind)
int unigonal_parameter(int N);

VectorKind classify_vector(const DecoratedDLattice& d, const IVec& v);
bool is_reflective(const DecoratedDLattice& d, const IVec& v);
// direct criterion: the reflection in v maps the lattice to itself and fixes
// the decoration class (used to cross-check is_reflective)
bool reflection_preserves_all(const DecoratedDLattice& d, const IVec& v);
bool eichler_equivalent(const DecoratedDLattice& d, const IVec& v,
                        const IVec& w);

int tau(int N);                      // 1 iff N mod 8 in {3,4}, else 2
DivisorClass boundary_divisor(int N);  // Delta(N) on F(N)

// canonical sample vectors of each kind
IVec nodal_example(const DecoratedDLattice& d);
IVec hyperelliptic_example(const DecoratedDLattice& d);
std::optional<IVec> unigonal_example(const DecoratedDLattice& d);

}  // namespace hkl
