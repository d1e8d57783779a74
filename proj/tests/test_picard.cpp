#include <doctest.h>

#include "hkl/dtower.hpp"
#include "hkl/picard.hpp"

using namespace hkl;

TEST_CASE("eighth-root arithmetic is exact") {
  Cyclotomic8 z = Cyclotomic8::zeta_pow(1);
  CHECK(z * z == Cyclotomic8::zeta_pow(2));
  CHECK(Cyclotomic8::zeta_pow(4) == Cyclotomic8::from_rat(Rat(-1)));
  CHECK(Cyclotomic8::zeta_pow(8) == Cyclotomic8::from_rat(Rat(1)));
  CHECK(Cyclotomic8::zeta_pow(-1) == Cyclotomic8::zeta_pow(7));
  CHECK(z.conj() == Cyclotomic8::zeta_pow(7));
  // |zeta|^2 = 1
  CHECK(z * z.conj() == Cyclotomic8::from_rat(Rat(1)));
  Cyclotomic8 s = z + Cyclotomic8::zeta_pow(3);
  CHECK(s - Cyclotomic8::zeta_pow(3) == z);
  CHECK(z.scaled(Rat(3, 2)).scaled(Rat(2, 3)) == z);
}

TEST_CASE("gauss sums match the signature identity") {
  for (int N = 3; N <= 25; ++N) CHECK(gauss_milgram_holds(N));
  // spot value: |A| = 4, signature (2 - N) mod 8
  DecoratedDLattice d = make_dlattice(5);
  CHECK(gauss_sum(d.fqf, 1) == Cyclotomic8::zeta_pow(5).scaled(Rat(2)));
}

TEST_CASE("cusp-form dimension agrees with its closed form") {
  for (int N = 3; N <= 25; ++N)
    CHECK(cusp_form_dim(N) == cusp_form_dim_closed(N));
}

TEST_CASE("rank table for the tower") {
  static const int want[] = {1, 2, 1, 1, 1, 1, 1, 1, 2,
                             3, 2, 2, 2, 3, 2, 2, 3, 4};
  for (int N = 3; N <= 20; ++N) {
    RankReport rep = picard_rank(N);
    CHECK(rep.N == N);
    CHECK(rep.rank == want[N - 3]);
    CHECK(rep.rank == rep.dim_cusp + 1);
    CHECK(rep.rank == rep.rank_closed_form);
  }
}

TEST_CASE("recorded ranks of the decorated quotients") {
  CHECK(asserted_picard_rank_decorated(18) == 2);
  CHECK(asserted_picard_rank_decorated(19) == 3);
  CHECK(asserted_picard_rank_decorated(20) == 4);
}
