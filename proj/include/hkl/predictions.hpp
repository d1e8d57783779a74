#pragma once

// wall predictor for the log-canonical variation lambda + beta*Delta:
// tower strata, flip times t, centers, critical beta walls, and the
// positivity audit of the restricted polarization

#include <optional>
#include <string>
#include <vector>

#include "hkl/divisor.hpp"

namespace hkl {

enum class StratumKind { f_path, f_then_l, f_then_m, f_then_q };

std::string to_string(StratumKind k);

struct Stratum {
  StratumKind kind;
  int M;  // inner index of the stratum
  int N;  // ambient tower index
  int dim;
  std::optional<int> t;  // flip time; absent when the stratum never flips

  // "F(19)", "Im f_{14,19}", "Im f_{11,19} o l_{11}", "Im m_{20}", ...
  std::string describe() const;
  // the composition of tower maps realizing the stratum
  std::vector<MapLabel> path() const;

  bool same_as(const Stratum& o) const { return kind == o.kind && M == o.M; }
};

// all tower strata of F(N), N >= 15, ordered by (t desc, dim asc, kind, M)
std::vector<Stratum> tower(int N);

std::optional<int> t_value(int N, const Stratum& s);

// combinatorial containment between tower strata (by composition paths)
bool stratum_contains(const Stratum& outer, const Stratum& inner);

// strata whose flip time strictly exceeds that of every proper superset
std::vector<Stratum> centers(int N);

struct Wall {
  Rat beta;  // 1/k
  int k;
  std::vector<Stratum> centers;
};

struct WallReport {
  int N;
  std::vector<Wall> walls;  // beta descending: 1, 1/2, 1/3, ...
  std::string terminal_contraction;  // what the beta = 1 wall contracts
};

WallReport walls(int N);

struct StratumRestriction {
  Stratum stratum;
  DivisorClass restriction;  // H_h rewritten by the Gritsenko relation, M<=13
  Rat lambda_coeff;
  bool lambda_positive;
  bool remainder_nonnegative;
};

struct PositivityReport {
  int N;
  Rat beta;
  std::vector<StratumRestriction> strata;
  bool all_positive;
};

PositivityReport positivity_audit(int N, const Rat& beta);

// deduplicated flip times of centers(N), descending
std::vector<int> center_t_values(int N);

// t-values of centers(N) = {t+1 : t of centers(N-1)} with 1 appended
bool shift_by_one_holds(int N);

}  // namespace hkl
