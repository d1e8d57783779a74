#pragma once

// divisor-class calculus on the tower: pullback matrices of the period-8
// contraction maps, the stable double cover, canonical classes, and the
// restriction of the polarization lambda + beta*Delta along map paths

#include <string>
#include <utility>
#include <vector>

#include "hkl/classes.hpp"
#include "hkl/dtower.hpp"

namespace hkl {

enum class MapKind { f, l, m, p, q, r, rho };

std::string to_string(MapKind k);

// a map of the tower diagram, indexed the way the display labels them:
//   f(N):   F(N-1)    -> F(N)
//   l(N):   FII(k)    -> F(N)      N = 8k+3
//   m(N):   FIIA1(k)  -> F(N)      N = 8k+4
//   q(N):   FIIA2(k)  -> F(N)      N = 8k+5
//   p(N):   FII(k)    -> FIIA1(k)  N = 8k+3
//   r(N):   FIIA1(k)  -> FIIA2(k)  N = 8k+4
//   rho(N): FStable(N)-> F(N)      N even
struct MapLabel {
  MapKind kind;
  int n;

  std::string to_string() const;
};

SpaceLabel map_domain(const MapLabel& map);
SpaceLabel map_codomain(const MapLabel& map);

// pullback of a class living on the codomain of `map`
DivisorClass pullback(const MapLabel& map, const DivisorClass& c);

// pushforward along the degree-2 cover rho(N); N even
DivisorClass pushforward_rho(int N, const DivisorClass& c);

DivisorClass canonical_class(const SpaceLabel& space);

// restriction of lambda + beta*Delta(N) along a composable chain of maps
// whose first entry has codomain F(N).  Evaluated both by iterated pullback
// and by the closed forms; the two must agree.
DivisorClass restrict_polarization(int N, const std::vector<MapLabel>& path,
                                   const Rat& beta);

// intersection rows of the four standard curve families, recorded on F(19)
// over the basis (lambda, Hn, Hh, Hu)
const std::vector<std::pair<std::string, QVec>>& curve_rows();
Rat curve_pairing(const std::string& curve, const DivisorClass& c);

// ample-line fixtures from the GIT comparison on F(19) and F(18)
DivisorClass git_polarization(int N);

}  // namespace hkl
