#include <doctest.h>

#include <set>
#include <sstream>
#include <vector>

#include "hkl/predictions.hpp"

using namespace hkl;

namespace {

std::string wall_line(const Wall& w) {
  std::ostringstream os;
  os << "1/" << w.k << ":";
  for (const Stratum& s : w.centers) os << " [" << s.describe() << "]";
  return os.str();
}

std::vector<int> k_list(const WallReport& rep) {
  std::vector<int> ks;
  for (const Wall& w : rep.walls) ks.push_back(w.k);
  return ks;
}

}  // namespace

TEST_CASE("flip t-values on the N=19 and N=20 towers") {
  Stratum f14{StratumKind::f_path, 14, 19, 14, std::nullopt};
  Stratum l11{StratumKind::f_then_l, 11, 19, 10, std::nullopt};
  Stratum f12{StratumKind::f_path, 12, 19, 12, std::nullopt};
  CHECK(t_value(19, f14) == 5);
  CHECK(t_value(19, l11) == 9);
  CHECK(t_value(19, f12) == 5);

  // the total space itself never flips
  Stratum f19{StratumKind::f_path, 19, 19, 19, std::nullopt};
  CHECK(!t_value(19, f19).has_value());

  Stratum m20{StratumKind::f_then_m, 20, 20, 19, std::nullopt};
  CHECK(t_value(20, m20) == 1);
  Stratum l19{StratumKind::f_then_l, 19, 20, 18, std::nullopt};
  CHECK(t_value(20, l19) == 4);

  // l(12) does not exist: 12 = 4 mod 8
  Stratum bad{StratumKind::f_then_l, 12, 19, 11, std::nullopt};
  CHECK_THROWS_AS(t_value(19, bad), std::invalid_argument);
}

TEST_CASE("tower membership, dimensions, and sort order") {
  auto tw = tower(19);
  // f_path 11..19 (9) + l at {11,19} (2) + m at {12} (1) + q at {13} (1)
  CHECK(tw.size() == 13);
  for (const Stratum& s : tw) {
    if (s.kind == StratumKind::f_path)
      CHECK(s.dim == s.M);
    else
      CHECK(s.dim == s.M - 1);
    CHECK(s.N == 19);
  }
  // deepest flip first: l(11) with t = 9
  CHECK(tw.front().kind == StratumKind::f_then_l);
  CHECK(tw.front().M == 11);
  CHECK(tw.front().t == 9);
  // the total space sorts last (no t, maximal dimension)
  CHECK(tw.back().kind == StratumKind::f_path);
  CHECK(tw.back().M == 19);
}

TEST_CASE("wall table for N=19") {
  WallReport rep = walls(19);
  CHECK(k_list(rep) == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 9});
  CHECK(rep.walls[0].beta == Rat(1));
  CHECK(rep.walls.back().beta == Rat(1, 9));
  CHECK(wall_line(rep.walls[0]) == "1/1: [Im f_{18,19}] [Im l_{19}]");
  CHECK(wall_line(rep.walls[1]) == "1/2: [Im f_{17,19}]");
  CHECK(wall_line(rep.walls[2]) == "1/3: [Im f_{16,19}]");
  CHECK(wall_line(rep.walls[3]) == "1/4: [Im f_{15,19}]");
  CHECK(wall_line(rep.walls[4]) == "1/5: [Im f_{14,19}]");
  CHECK(wall_line(rep.walls[5]) == "1/6: [Im f_{13,19} o q_{13}]");
  CHECK(wall_line(rep.walls[6]) == "1/7: [Im f_{12,19} o m_{12}]");
  CHECK(wall_line(rep.walls[7]) == "1/9: [Im f_{11,19} o l_{11}]");
  CHECK(rep.terminal_contraction == "Delta^(1)(19) = Im f_{18,19} + Im l_{19}");
}

TEST_CASE("wall table for N=18") {
  WallReport rep = walls(18);
  CHECK(k_list(rep) == std::vector<int>{1, 2, 3, 4, 5, 6, 8});
  CHECK(wall_line(rep.walls[0]) == "1/1: [Im f_{17,18}]");
  CHECK(wall_line(rep.walls[4]) == "1/5: [Im f_{13,18} o q_{13}]");
  CHECK(wall_line(rep.walls[5]) == "1/6: [Im f_{12,18} o m_{12}]");
  CHECK(wall_line(rep.walls[6]) == "1/8: [Im f_{11,18} o l_{11}]");
  CHECK(rep.terminal_contraction == "Delta^(1)(18) = Im f_{17,18}");
}

TEST_CASE("wall table for N=20 collects the 4 mod 8 coincidences") {
  WallReport rep = walls(20);
  CHECK(k_list(rep) == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 10});
  // m(20) shares its wall with f(19); l(19) shares its wall with f(16)
  CHECK(wall_line(rep.walls[0]) == "1/1: [Im f_{19,20}] [Im m_{20}]");
  CHECK(wall_line(rep.walls[3]) ==
        "1/4: [Im f_{16,20}] [Im f_{19,20} o l_{19}]");
  CHECK(wall_line(rep.walls[8]) == "1/10: [Im f_{11,20} o l_{11}]");
  CHECK(rep.terminal_contraction == "Delta^(1)(20) = Im f_{19,20} + Im m_{20}");
}

TEST_CASE("center t-values are 1..N-10 with N-11 skipped") {
  for (int N = 15; N <= 25; ++N) {
    std::vector<int> want;
    for (int t = N - 10; t >= 1; --t)
      if (t != N - 11) want.push_back(t);
    CHECK(center_t_values(N) == want);
  }
}

TEST_CASE("strata that tie with a larger stratum are not centers") {
  // in the N=22 tower, m(20) and q(21) tie with f(20) and f(21)
  auto cs = centers(22);
  for (const Stratum& s : cs) {
    CHECK(!(s.kind == StratumKind::f_then_m && s.M == 20));
    CHECK(!(s.kind == StratumKind::f_then_q && s.M == 21));
  }
  bool has_l19 = false;
  for (const Stratum& s : cs)
    if (s.kind == StratumKind::f_then_l && s.M == 19) has_l19 = true;
  CHECK(has_l19);
}

TEST_CASE("center t-value sets shift by one down the tower") {
  for (int N = 16; N <= 25; ++N) CHECK(shift_by_one_holds(N));
}

TEST_CASE("positivity holds exactly below the deepest wall") {
  for (int N = 15; N <= 25; ++N) {
    std::vector<Rat> betas;
    for (int k = 1; k <= N - 9; ++k) {
      betas.push_back(Rat(1, k));
      betas.push_back(Rat(2, 2 * k + 1));  // mediant of 1/k and 1/(k+1)
    }
    for (const Rat& b : betas) {
      PositivityReport rep = positivity_audit(N, b);
      bool want = b < Rat(1, N - 10);
      CHECK(rep.all_positive == want);
    }
  }
}

TEST_CASE("restricted polarizations follow the 1 - t*beta law") {
  Rat b(1, 97);
  for (int N = 15; N <= 25; ++N) {
    PositivityReport rep = positivity_audit(N, b);
    for (const auto& row : rep.strata) {
      int teff = row.stratum.t.value_or(0);
      CHECK(row.lambda_coeff == Rat(1) - Rat(teff) * b);
      CHECK(row.lambda_positive);
      CHECK(row.remainder_nonnegative);
      for (std::size_t i = 1; i < row.restriction.coeffs.size(); ++i)
        CHECK(row.restriction.coeffs[i] >= 0);
    }
  }
}

TEST_CASE("no wall predictions below N = 15") {
  CHECK_THROWS_WITH_AS(
      walls(14),
      "no wall predictions below N = 15: the boundary class is ample or "
      "movable there",
      std::invalid_argument);
  CHECK_THROWS_AS(tower(14), std::invalid_argument);
  CHECK_THROWS_AS(positivity_audit(19, Rat(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(positivity_audit(19, Rat(-1, 2)), std::invalid_argument);
}
