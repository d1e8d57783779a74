// Saturated embeddings of the D-tower lattices into the even unimodular
// lattice of signature (2,26) by discriminant-form gluing, quasi-pullback
// weights, Heegner-divisor coefficients from root counts in saturations, and
// the resulting divisor-class relations.
#pragma once

#include "hkl/classes.hpp"
#include "hkl/dtower.hpp"
#include "hkl/lattice.hpp"

#include <utility>
#include <vector>

namespace hkl {

enum class EmbeddingVariant { D, E8D };

std::string to_string(EmbeddingVariant v);

struct Embedding {
  int N = 0;
  EmbeddingVariant variant = EmbeddingVariant::D;
  int k = 0;   // E8 summands in the II-part of the image
  int a8 = 0;  // rank of the glued D-summand of the image (1..8)
  int c = 0;   // rank of the D-part of the complement

  Lattice ambient;       // glued even unimodular lattice, rank 28
  QMat base_in_ambient;  // pre-glue direct-sum basis in ambient coords
  IMat image_rows;       // image of the rank-(N+2) lattice, ambient coords
  IMat complement_rows;  // saturated orthogonal complement, ambient coords
  Lattice complement;
  Int complement_root_count;

  // express a vector given in pre-glue block coords in ambient coords
  IVec to_ambient(const IVec& base_coords) const;
};

// variant D: complement D_{26-N}, 3 <= N <= 25
// variant E8D: complement D_{18-N} + E8, 3 <= N <= 17
Embedding embed_complement(int N, EmbeddingVariant variant);

// 12 + |R(complement)|/2, checked against the weight polynomial in N
Int quasi_pullback_weight(const Embedding& e);
Int quasi_pullback_weight(int N, EmbeddingVariant variant);

struct HeegnerCoefficient {
  std::string label;  // "0", "xi", "zeta", "zeta_prime"
  Int computed = 0;   // half the root-count excess of the saturation
  Int expected = 0;   // closed form (for zeta in variant D: defines mu)
  Int saturation_roots = 0;
  std::string note;
  bool matches() const { return computed == expected; }
};

struct HeegnerSet {
  int N = 0;
  EmbeddingVariant variant = EmbeddingVariant::D;
  std::vector<HeegnerCoefficient> coeffs;
  const HeegnerCoefficient& at(const std::string& label) const;
  bool all_match() const;
};

// single coefficient a_label = (|R(Sat<v, comp>)| - |R(comp)|)/2
Int heegner_coefficient(const Embedding& e, const std::string& label);
HeegnerSet heegner_coefficients(const Embedding& e);

// unigonal coefficient of the weight-relation, variant D (zero when the
// lattice has no unigonal vectors, N = 2 mod 8)
Int mu_value(int N);
std::vector<std::pair<int, Int>> mu_table(int lo, int hi);

// 2w lambda = Hn + 2(26-N) Hh + tau mu Hu on F(N), assembled from computed
// coefficients; decoration "zeta" (N = 6 mod 8 only) swaps the Hh/Hu roles
Relation first_relation(int N, const std::string& decoration = "xi");
// same via the E8 + D complement, 3 <= N <= 17
Relation second_relation(int N);
// difference of the two: 32(14-N) lambda = 16 Hh + tau (mu(N)-mu(N+8)) Hu
Relation gritsenko_relation(int N);
// relation in the stable quotient (N even): separate zeta/zeta' classes
Relation stable_relation(int N, const std::string& which = "first");

// decorations realizable by norm -4 even-divisibility vectors in the
// variant-D complement (glue-partner classes)
std::vector<std::string> admissible_decorations(int N);

}  // namespace hkl
