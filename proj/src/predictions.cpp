#include "hkl/predictions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hkl/borcherds.hpp"

namespace hkl {

std::string to_string(StratumKind k) {
  switch (k) {
    case StratumKind::f_path: return "f_path";
    case StratumKind::f_then_l: return "f_then_l";
    case StratumKind::f_then_m: return "f_then_m";
    case StratumKind::f_then_q: return "f_then_q";
  }
  throw std::logic_error("unhandled stratum kind");
}

namespace {

MapKind inner_map(StratumKind k) {
  switch (k) {
    case StratumKind::f_then_l: return MapKind::l;
    case StratumKind::f_then_m: return MapKind::m;
    case StratumKind::f_then_q: return MapKind::q;
    default: throw std::logic_error("no inner map for an f-path stratum");
  }
}

int kind_order(StratumKind k) { return static_cast<int>(k); }

}  // namespace

std::string Stratum::describe() const {
  std::string mm = std::to_string(M);
  if (kind == StratumKind::f_path) {
    if (M == N) return "F(" + std::to_string(N) + ")";
    return "Im f_{" + mm + "," + std::to_string(N) + "}";
  }
  std::string inner = to_string(inner_map(kind)) + "_{" + mm + "}";
  if (M == N) return "Im " + inner;
  return "Im f_{" + mm + "," + std::to_string(N) + "} o " + inner;
}

std::vector<MapLabel> Stratum::path() const {
  std::vector<MapLabel> out;
  for (int i = N; i > M; --i) out.push_back({MapKind::f, i});
  if (kind != StratumKind::f_path) out.push_back({inner_map(kind), M});
  return out;
}

std::optional<int> t_value(int N, const Stratum& s) {
  if (N < 15) throw std::invalid_argument("tower needs N >= 15");
  bool in_tower = s.N == N && s.M <= N;
  switch (s.kind) {
    case StratumKind::f_path: in_tower &= s.M >= 11; break;
    case StratumKind::f_then_l: in_tower &= s.M >= 11 && s.M % 8 == 3; break;
    case StratumKind::f_then_m: in_tower &= s.M >= 12 && s.M % 8 == 4; break;
    case StratumKind::f_then_q: in_tower &= s.M >= 13 && s.M % 8 == 5; break;
  }
  if (!in_tower) throw std::invalid_argument("stratum not in tower");
  switch (s.kind) {
    case StratumKind::f_path:
      if (s.M <= 13) return N - 14;            // item (3)
      if (s.M == N) return std::nullopt;       // item (1a) top end
      return N - s.M;                          // item (1a)
    case StratumKind::f_then_m:
      if (s.M == N) return 1;                  // item (4)
      return N - s.M;                          // item (1b)
    case StratumKind::f_then_q:
      if (s.M == N) return std::nullopt;       // item (1c) top end
      return N - s.M;                          // item (1c)
    case StratumKind::f_then_l:
      if (s.M == N - 1) return 4;              // item (5), forces N = 4 mod 8
      return N - s.M + 1;                      // item (2)
  }
  throw std::logic_error("unhandled stratum kind");
}

std::vector<Stratum> tower(int N) {
  if (N < 15) throw std::invalid_argument("tower needs N >= 15");
  std::vector<Stratum> out;
  auto add = [&](StratumKind kind, int M, int dim) {
    Stratum s{kind, M, N, dim, std::nullopt};
    s.t = t_value(N, s);
    out.push_back(s);
  };
  for (int M = 11; M <= N; ++M) add(StratumKind::f_path, M, M);
  for (int M = 11; M <= N; M += 8) add(StratumKind::f_then_l, M, M - 1);
  for (int M = 12; M <= N; M += 8) add(StratumKind::f_then_m, M, M - 1);
  for (int M = 13; M <= N; M += 8) add(StratumKind::f_then_q, M, M - 1);
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    int ta = a.t.value_or(0), tb = b.t.value_or(0);
    if (ta != tb) return ta > tb;
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.kind != b.kind) return kind_order(a.kind) < kind_order(b.kind);
    return a.M < b.M;
  });
  return out;
}

bool stratum_contains(const Stratum& outer, const Stratum& inner) {
  if (outer.same_as(inner)) return true;
  if (outer.kind == StratumKind::f_path) return inner.M <= outer.M;
  if (inner.kind == StratumKind::f_path) return false;
  // inner kinds nest l < m < q inside one period-8 window
  int wo = (outer.M - 11) / 8, wi = (inner.M - 11) / 8;
  return wo == wi && kind_order(inner.kind) <= kind_order(outer.kind) &&
         inner.M <= outer.M;
}

std::vector<Stratum> centers(int N) {
  std::vector<Stratum> tw = tower(N);
  std::vector<Stratum> out;
  for (const Stratum& x : tw) {
    if (!x.t) continue;
    bool strict = true;
    for (const Stratum& y : tw) {
      if (y.same_as(x) || !stratum_contains(y, x)) continue;
      if (*x.t <= y.t.value_or(0)) {
        strict = false;
        break;
      }
    }
    if (strict) out.push_back(x);
  }
  return out;
}

WallReport walls(int N) {
  if (N < 15)
    throw std::invalid_argument(
        "no wall predictions below N = 15: the boundary class is ample or "
        "movable there");
  WallReport rep;
  rep.N = N;
  std::map<int, std::vector<Stratum>> by_t;
  for (const Stratum& s : centers(N)) by_t[*s.t].push_back(s);
  for (const auto& [t, strata] : by_t) rep.walls.push_back({Rat(1, t), t, strata});
  // centers() is tower-ordered, so each wall's list is already deterministic;
  // walls themselves go beta-descending = t ascending (map order)
  rep.terminal_contraction =
      "Delta^(1)(" + std::to_string(N) + ") = Im f_{" + std::to_string(N - 1) +
      "," + std::to_string(N) + "}";
  if (N % 8 == 3)
    rep.terminal_contraction += " + Im l_{" + std::to_string(N) + "}";
  else if (N % 8 == 4)
    rep.terminal_contraction += " + Im m_{" + std::to_string(N) + "}";
  return rep;
}

namespace {

// rewrite the H_h coordinate of a class on F(M) through the Gritsenko
// relation: 32(14-M) lambda = 16 H_h + c_u H_u
DivisorClass gritsenko_substitute(const DivisorClass& c) {
  int M = c.space.n;
  Rat hh = c.coeff("Hh");
  if (hh == 0) return c;
  Relation g = gritsenko_relation(M);
  DivisorClass out = c;
  out.set("Hh", 0);
  out.addto("lambda", hh * g.lhs_lambda / 16);
  out.addto("Hu", -hh * g.rhs.coeff("Hu") / 16);
  return out;
}

}  // namespace

PositivityReport positivity_audit(int N, const Rat& beta) {
  if (beta < 0 || beta > 1)
    throw std::invalid_argument("beta must lie in [0, 1]");
  PositivityReport rep;
  rep.N = N;
  rep.beta = beta;
  rep.all_positive = true;
  for (const Stratum& s : tower(N)) {
    StratumRestriction row;
    row.stratum = s;
    row.restriction = restrict_polarization(N, s.path(), beta);
    if (s.kind == StratumKind::f_path && s.M <= 13)
      row.restriction = gritsenko_substitute(row.restriction);
    row.lambda_coeff = row.restriction.lambda();
    row.lambda_positive = row.lambda_coeff > 0;
    row.remainder_nonnegative = true;
    for (size_t i = 1; i < row.restriction.coeffs.size(); ++i)
      if (row.restriction.coeffs[i] < 0) row.remainder_nonnegative = false;
    if (!row.lambda_positive || !row.remainder_nonnegative)
      rep.all_positive = false;
    rep.strata.push_back(std::move(row));
  }
  return rep;
}

std::vector<int> center_t_values(int N) {
  std::vector<int> ts;
  for (const Stratum& s : centers(N)) ts.push_back(*s.t);
  std::sort(ts.rbegin(), ts.rend());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

bool shift_by_one_holds(int N) {
  if (N < 16) throw std::invalid_argument("shift comparison needs N >= 16");
  std::vector<int> prev = center_t_values(N - 1);
  for (int& t : prev) ++t;
  prev.push_back(1);
  std::sort(prev.rbegin(), prev.rend());
  prev.erase(std::unique(prev.begin(), prev.end()), prev.end());
  return prev == center_t_values(N);
}

}  // namespace hkl
