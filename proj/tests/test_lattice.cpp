#include <doctest.h>

#include <random>

#include "hkl/lattice.hpp"
#include "oracles.hpp"

using namespace hkl;

TEST_CASE("standard constructors: grams, determinants, parity") {
  Lattice u = make_U();
  CHECK(u.gram(0, 0) == 0);
  CHECK(u.gram(0, 1) == 1);
  CHECK(u.det() == -1);

  CHECK(make_A(2).det() == 3);
  CHECK(make_D(1).gram(0, 0) == -4);
  Lattice d2 = make_D(2);  // diag(-2,-2)
  CHECK(d2.gram(0, 0) == -2);
  CHECK(d2.gram(0, 1) == 0);
  CHECK(d2.gram(1, 1) == -2);
  for (int m = 1; m <= 8; ++m) {
    Lattice d = make_D(m);
    CHECK(d.is_even());
    CHECK(abs(d.det()) == 4);
  }
  Lattice e2 = make_E(2);
  CHECK(e2.gram(0, 0) == -4);
  CHECK(e2.gram(0, 1) == 1);
  CHECK(e2.gram(1, 1) == -2);
  for (int r = 2; r <= 8; ++r) CHECK(abs(make_E(r).det()) == 9 - r);

  Lattice ii = make_II(2, 10);
  CHECK(ii.rank() == 12);
  CHECK(ii.is_even());
  CHECK(abs(ii.det()) == 1);
  CHECK(make_II(2, 26).rank() == 28);

  CHECK(standard("D_4").gram == make_D(4).gram);
  CHECK(standard("U(2)").gram(0, 1) == 2);
  CHECK(standard("II_{2,10}").gram == make_II(2, 10).gram);
  CHECK_THROWS_AS(standard("Z_9"), std::invalid_argument);
}

TEST_CASE("divisibility and dual classes of named D-lattice vectors") {
  // vectors given in Euclidean coordinates of the D factor
  {
    Lattice d5 = make_D(5);
    IVec v = d_from_euclidean(5, {Rat(2), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(norm_of(d5, v) == -4);
    CHECK(divisibility(d5, v) == 2);
  }
  {
    Lattice d4 = make_D(4);
    IVec v = d_from_euclidean(4, {Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(norm_of(d4, v) == -4);
    CHECK(divisibility(d4, v) == 2);
    FiniteQuadraticForm fqf = discriminant_group(d4);
    QVec alpha = solve_rational(transpose(d_euclid_basis(4)),
                                {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK(disc_class(d4, fqf, v) == fqf.class_of_dual(alpha));
    // Klein four-group with q = 1 on every nonzero class
    CHECK(fqf.order() == 4);
    for (const auto& e : fqf.elements())
      if (!fqf.is_zero(e)) CHECK(fqf.q(e) == 1);
  }
  {
    Lattice d3 = make_D(3);
    IVec v = d_from_euclidean(3, {Rat(2), Rat(0), Rat(0)});
    CHECK(divisibility(d3, v) == 2);
    FiniteQuadraticForm fqf = discriminant_group(d3);
    REQUIRE(fqf.orders.size() == 1);
    CHECK(fqf.orders[0] == 4);
    QVec alpha = solve_rational(transpose(d_euclid_basis(3)),
                                {Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    auto gen = fqf.class_of_dual(alpha);
    CHECK(fqf.q(gen) == Rat(5, 4));
    CHECK(disc_class(d3, fqf, v) == fqf.scale(gen, 2));
  }
}

TEST_CASE("error contracts: degeneracy, primitivity, definiteness") {
  Lattice degenerate{IMat(2, 2), "zero"};
  CHECK_THROWS_WITH_AS(discriminant_group(degenerate), "degenerate lattice",
                       std::domain_error);
  Lattice d4 = make_D(4);
  FiniteQuadraticForm fqf = discriminant_group(d4);
  IVec twice = {Int(2), Int(0), Int(0), Int(0)};
  CHECK_THROWS_WITH_AS(disc_class(d4, fqf, twice), "vector not primitive",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(short_vectors(make_U(), -2),
                       "enumeration requires definite lattice",
                       std::domain_error);
}

TEST_CASE("short vector enumeration is sorted and complete") {
  auto roots = short_vectors(make_D(2), -2);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == IVec{Int(-1), Int(0)});
  CHECK(roots[1] == IVec{Int(0), Int(-1)});
  CHECK(roots[2] == IVec{Int(0), Int(1)});
  CHECK(roots[3] == IVec{Int(1), Int(0)});

  CHECK(root_count(make_A(2)) == 6);
  for (int m = 1; m <= 9; ++m)
    CHECK(root_count(make_D(m)) == size_t(2 * m * (m - 1)));
  static const size_t e_roots[] = {2, 8, 20, 40, 72, 126, 240};
  for (int r = 2; r <= 8; ++r) CHECK(root_count(make_E(r)) == e_roots[r - 2]);
}

TEST_CASE("short vectors match the box oracle on random definite forms") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dist(-2, 2);
  int done = 0;
  while (done < 12) {
    size_t n = 3 + done % 2;
    IMat b(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) b(i, j) = dist(rng);
    if (det_bareiss(b) == 0) continue;
    // gram = -2 B^T B is even and negative definite
    IMat gram = mat_mul(transpose(b), b);
    for (auto& x : gram.a) x *= -2;
    Lattice l{gram, "random"};
    for (Int target : {Int(-2), Int(-4), Int(-8)}) {
      auto fast = short_vectors(l, target);
      auto slow = oracles::box_short_vectors(l, target);
      CHECK(fast == slow);
    }
    ++done;
  }
}

TEST_CASE("gluing recovers the even unimodular rank-8 lattice from D_8") {
  QVec alpha(8, Rat(1, 2));
  QVec alpha_basis =
      solve_rational(transpose(d_euclid_basis(8)), alpha);
  GluedLattice g = glue(make_D(8), {alpha_basis});
  CHECK(g.lattice.rank() == 8);
  CHECK(g.lattice.is_even());
  CHECK(abs(g.lattice.det()) == 1);
  CHECK(root_count(g.lattice) == 240);
}

TEST_CASE("orthogonal complements inside the glued rank-8 lattice") {
  QVec alpha(8, Rat(1, 2));
  QVec alpha_basis =
      solve_rational(transpose(d_euclid_basis(8)), alpha);
  Lattice e8 = glue(make_D(8), {alpha_basis}).lattice;
  auto roots = short_vectors(e8, -2);
  REQUIRE(!roots.empty());
  IMat one_root(1, 8);
  for (size_t j = 0; j < 8; ++j) one_root(0, j) = roots[0][j];
  IMat perp = orthogonal_complement_rows(e8, one_root);
  Lattice e7 = lattice_of_rows(e8, perp);
  CHECK(e7.rank() == 7);
  CHECK(root_count(e7) == 126);
  CHECK(abs(e7.det()) == 2);
}

TEST_CASE("saturation removes finite index in an ambient lattice") {
  Lattice d4 = make_D(4);
  IMat rows(1, 4);
  rows(0, 0) = 2;  // twice a basis vector
  Sublattice s = saturation({d4, rows});
  REQUIRE(s.basis.rows == 1);
  IVec v = s.basis.row(0);
  CHECK(is_primitive(v));
  CHECK(norm_of(d4, v) == -2);
}

TEST_CASE("euclidean coordinate bridge for D-lattices") {
  QVec p = d_to_euclidean(4, {Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(p == QVec{Rat(1), Rat(-1), Rat(0), Rat(0)});
  IVec back = d_from_euclidean(4, p);
  CHECK(back == IVec{Int(1), Int(0), Int(0), Int(0)});
  // odd-sum points are not in the lattice
  CHECK_THROWS_AS(d_from_euclidean(3, {Rat(1), Rat(0), Rat(0)}),
                  std::invalid_argument);
}
