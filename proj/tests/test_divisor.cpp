#include <doctest.h>

#include "hkl/borcherds.hpp"
#include "hkl/divisor.hpp"
#include "hkl/dtower.hpp"

using namespace hkl;

namespace {

DivisorClass unit(const SpaceLabel& s, const std::string& name) {
  return unit_class(s, name);
}

}  // namespace

TEST_CASE("map domains and codomains") {
  CHECK(map_domain({MapKind::f, 19}).to_string() == "F(18)");
  CHECK(map_codomain({MapKind::f, 19}).to_string() == "F(19)");
  CHECK(map_domain({MapKind::l, 11}).to_string() == "FII(1)");
  CHECK(map_domain({MapKind::m, 12}).to_string() == "FIIA1(1)");
  CHECK(map_domain({MapKind::q, 13}).to_string() == "FIIA2(1)");
  CHECK(map_codomain({MapKind::p, 11}).to_string() == "FIIA1(1)");
  CHECK(map_codomain({MapKind::r, 12}).to_string() == "FIIA2(1)");
  CHECK(map_domain({MapKind::rho, 20}).to_string() == "FStable(20)");
  CHECK_THROWS_AS(map_domain({MapKind::f, 3}), std::invalid_argument);
  CHECK_THROWS_AS(map_domain({MapKind::l, 12}), std::invalid_argument);
  CHECK_THROWS_AS(map_domain({MapKind::rho, 19}), std::invalid_argument);
}

TEST_CASE("pullback of generators along the tower maps") {
  SpaceLabel f19 = SpaceLabel::F(19), f18 = SpaceLabel::F(18);
  // lambda is always preserved
  CHECK(pullback({MapKind::f, 19}, unit(f19, "lambda")) ==
        unit(f18, "lambda"));
  CHECK(format_class(pullback({MapKind::f, 19}, unit(f19, "Hh"))) ==
        "-2 \xce\xbb + 1 Hh");
  {
    // residue 5: the nodal pullback picks up the unigonal divisor
    DivisorClass got = pullback({MapKind::f, 13}, unit(SpaceLabel::F(13), "Hn"));
    CHECK(got.coeff("Hn") == 1);
    CHECK(got.coeff("Hh") == 2);
    CHECK(got.coeff("Hu") == 1);
    CHECK(pullback({MapKind::f, 13}, unit(SpaceLabel::F(13), "Hu")).coeff("Hu") == 1);
  }
  {
    // residue 4: the hyperelliptic pullback picks it up instead
    DivisorClass got = pullback({MapKind::f, 12}, unit(SpaceLabel::F(12), "Hh"));
    CHECK(got.coeff("lambda") == -2);
    CHECK(got.coeff("Hh") == 1);
    CHECK(got.coeff("Hu") == 1);
  }
  // residue 3: the unigonal divisor contracts
  CHECK(pullback({MapKind::f, 11}, unit(SpaceLabel::F(11), "Hu")).is_zero());
  {
    SpaceLabel fii = SpaceLabel::FII(1);
    CHECK(pullback({MapKind::l, 11}, unit(SpaceLabel::F(11), "Hh")).is_zero());
    CHECK(pullback({MapKind::l, 11}, unit(SpaceLabel::F(11), "Hu")) ==
          unit_class(fii, "lambda", Rat(-2)));
  }
  {
    DivisorClass got = pullback({MapKind::m, 12}, unit(SpaceLabel::F(12), "Hu"));
    CHECK(got.coeff("lambda") == -2);
    CHECK(got.coeff("Hu") == 1);
    CHECK(pullback({MapKind::m, 12}, unit(SpaceLabel::F(12), "Hh")).coeff("Hu") == 2);
  }
  {
    DivisorClass got = pullback({MapKind::q, 13}, unit(SpaceLabel::F(13), "Hu"));
    CHECK(got.coeff("lambda") == -1);
    CHECK(got.coeff("Hu") == Rat(3, 2));
    got = pullback({MapKind::q, 13}, unit(SpaceLabel::F(13), "Hn"));
    CHECK(got.coeff("Hn") == 1);
    CHECK(got.coeff("Hu") == 2);
  }
  {
    DivisorClass got = pullback({MapKind::r, 12},
                                unit(SpaceLabel::FIIA2(1), "Hn"));
    CHECK(got.coeff("lambda") == 1);
    CHECK(got.coeff("Hn") == 1);
    CHECK(got.coeff("Hu") == 2);
    CHECK(pullback({MapKind::p, 11}, unit(SpaceLabel::FIIA1(1), "Hu")) ==
          unit_class(SpaceLabel::FII(1), "lambda", Rat(-2)));
  }
  // applying a map to a class on the wrong space is an error
  CHECK_THROWS_AS(pullback({MapKind::f, 19}, unit(f18, "Hh")),
                  std::invalid_argument);
}

TEST_CASE("degree-2 stable cover: projection formula") {
  SpaceLabel f20 = SpaceLabel::F(20);
  for (const std::string& name : {"lambda", "Hn", "Hh", "Hu"}) {
    DivisorClass up = pullback({MapKind::rho, 20}, unit(f20, name));
    CHECK(pushforward_rho(20, up) == unit(f20, name).scaled(2));
  }
  CHECK(format_class(pullback({MapKind::rho, 20}, unit(f20, "Hu"))) ==
        "1 Hzeta + 1 Hzeta'");
  // no unigonal class downstairs at N = 2 mod 8
  DivisorClass z = unit_class(SpaceLabel::FStable(18), "Hzeta");
  CHECK_THROWS_AS(pushforward_rho(18, z), std::invalid_argument);
}

TEST_CASE("canonical classes by space kind") {
  DivisorClass k19 = canonical_class(SpaceLabel::F(19));
  CHECK(k19.coeff("lambda") == 19);
  CHECK(k19.coeff("Hn") == Rat(-1, 2));
  CHECK(k19.coeff("Hh") == Rat(-1, 2));
  CHECK(k19.coeff("Hu") == Rat(-1, 2));
  DivisorClass k13 = canonical_class(SpaceLabel::F(13));
  CHECK(k13.coeff("Hu") == 0);  // only at N = 3,4 mod 8
  CHECK(canonical_class(SpaceLabel::FII(1)).coeff("lambda") == 10);
  DivisorClass ka1 = canonical_class(SpaceLabel::FIIA1(1));
  CHECK(ka1.coeff("lambda") == 11);
  CHECK(ka1.coeff("Hu") == Rat(-1, 2));
  CHECK(canonical_class(SpaceLabel::FIIA2(1)).coeff("lambda") == 12);
  CHECK_THROWS_AS(canonical_class(SpaceLabel::FStable(20)),
                  std::invalid_argument);
}

TEST_CASE("boundary pullback identities along the connecting map") {
  for (int N = 4; N <= 25; ++N) {
    DivisorClass got =
        pullback({MapKind::f, N}, boundary_divisor(N));
    DivisorClass want = unit_class(SpaceLabel::F(N - 1), "lambda", Rat(-1));
    if (N % 8 == 5) {
      want.addto("Hh", Rat(1, 2));
    } else if (N % 8 == 4) {
      want = want + boundary_divisor(N - 1);
      want.addto("Hu", 1);
    } else {
      want = want + boundary_divisor(N - 1);
    }
    CHECK(got == want);
  }
}

TEST_CASE("restriction closed forms agree with matrix iteration") {
  // restrict_polarization recomputes each restriction twice and throws on
  // any disagreement; spot-check values too
  {
    DivisorClass r = restrict_polarization(12, {{MapKind::m, 12}}, Rat(1, 4));
    CHECK(r.coeff("lambda") == Rat(3, 4));
    CHECK(r.coeff("Hu") == Rat(3, 8));
  }
  {
    DivisorClass r = restrict_polarization(19, {}, Rat(1, 2));
    CHECK(r.coeff("lambda") == 1);
    CHECK(r.coeff("Hh") == Rat(1, 4));
    CHECK(r.coeff("Hu") == Rat(1, 4));
  }
  {
    // restricting straight to the unigonal stratum costs one beta
    DivisorClass r = restrict_polarization(11, {{MapKind::l, 11}}, Rat(1, 9));
    CHECK(r.space.to_string() == "FII(1)");
    CHECK(r.coeff("lambda") == Rat(8, 9));
  }
  {
    // one f step first: the extra Hu picked up at N = 4 mod 8 steepens the
    // drop to 4 beta (l only exists one floor below such N)
    DivisorClass r = restrict_polarization(
        12, {{MapKind::f, 12}, {MapKind::l, 11}}, Rat(1, 9));
    CHECK(r.space.to_string() == "FII(1)");
    CHECK(r.coeff("lambda") == Rat(5, 9));
  }
  {
    // same shape higher up the tower
    DivisorClass r = restrict_polarization(
        20, {{MapKind::f, 20}, {MapKind::l, 19}}, Rat(1, 9));
    CHECK(r.coeff("lambda") == Rat(5, 9));
  }
  CHECK_THROWS_AS(restrict_polarization(19, {}, Rat(2)), std::invalid_argument);
  CHECK_THROWS_AS(restrict_polarization(19, {{MapKind::f, 18}}, Rat(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      restrict_polarization(19, {{MapKind::f, 19}, {MapKind::f, 17}}, Rat(0)),
      std::invalid_argument);
  CHECK_THROWS_AS(restrict_polarization(20, {{MapKind::rho, 20}}, Rat(0)),
                  std::invalid_argument);
}

TEST_CASE("curve rows annihilate the weight relation and meet the boundary") {
  DivisorClass zero = first_relation(19).as_zero_class();
  DivisorClass pol = git_polarization(19);
  static const int want[] = {1, 0, 0, 2};
  size_t i = 0;
  for (const auto& [name, row] : curve_rows()) {
    CHECK(curve_pairing(name, zero) == 0);
    CHECK(curve_pairing(name, pol) == want[i]);
    ++i;
  }
  CHECK(i == 4);
  CHECK_THROWS_AS(curve_pairing("Gamma9", pol), std::invalid_argument);
  CHECK_THROWS_AS(
      curve_pairing("Gamma1", unit_class(SpaceLabel::F(18), "lambda")),
      std::invalid_argument);
}

TEST_CASE("ample fixtures from the geometric quotients") {
  CHECK(format_class(git_polarization(18)) == "2 \xce\xbb + 1 Hh");
  DivisorClass g19 = git_polarization(19);
  CHECK(g19.coeff("lambda") == 1);
  CHECK(g19.coeff("Hh") == Rat(1, 2));
  CHECK(g19.coeff("Hu") == Rat(1, 2));
  CHECK_THROWS_AS(git_polarization(17), std::invalid_argument);
}

TEST_CASE("weight relations descend along the connecting map") {
  for (int N : {5, 11, 12, 13, 19, 20, 21}) {
    DivisorClass down =
        pullback({MapKind::f, N}, first_relation(N).as_zero_class());
    CHECK(down == first_relation(N - 1).as_zero_class());
  }
}
