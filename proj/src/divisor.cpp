#include "hkl/divisor.hpp"

#include <stdexcept>

namespace hkl {

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::f: return "f";
    case MapKind::l: return "l";
    case MapKind::m: return "m";
    case MapKind::p: return "p";
    case MapKind::q: return "q";
    case MapKind::r: return "r";
    case MapKind::rho: return "rho";
  }
  throw std::logic_error("unhandled map kind");
}

std::string MapLabel::to_string() const {
  return hkl::to_string(kind) + "(" + std::to_string(n) + ")";
}

namespace {

int level_of(const MapLabel& map, int residue) {
  if (map.n < 3 || (map.n - residue) % 8 != 0 || map.n < residue)
    throw std::invalid_argument(map.to_string() +
                                " needs index = " + std::to_string(residue) +
                                " mod 8");
  return (map.n - residue) / 8;
}

}  // namespace

SpaceLabel map_domain(const MapLabel& map) {
  switch (map.kind) {
    case MapKind::f:
      if (map.n < 4) throw std::invalid_argument("f needs index >= 4");
      return SpaceLabel::F(map.n - 1);
    case MapKind::l: return SpaceLabel::FII(level_of(map, 3));
    case MapKind::m: return SpaceLabel::FIIA1(level_of(map, 4));
    case MapKind::q: return SpaceLabel::FIIA2(level_of(map, 5));
    case MapKind::p: return SpaceLabel::FII(level_of(map, 3));
    case MapKind::r: return SpaceLabel::FIIA1(level_of(map, 4));
    case MapKind::rho:
      if (map.n < 4 || map.n % 2 != 0)
        throw std::invalid_argument("rho needs an even index");
      return SpaceLabel::FStable(map.n);
  }
  throw std::logic_error("unhandled map kind");
}

SpaceLabel map_codomain(const MapLabel& map) {
  switch (map.kind) {
    case MapKind::f:
      if (map.n < 4) throw std::invalid_argument("f needs index >= 4");
      return SpaceLabel::F(map.n);
    case MapKind::l: return SpaceLabel::F(map.n);
    case MapKind::m: return SpaceLabel::F(map.n);
    case MapKind::q: return SpaceLabel::F(map.n);
    case MapKind::p: return SpaceLabel::FIIA1(level_of(map, 3));
    case MapKind::r: return SpaceLabel::FIIA2(level_of(map, 4));
    case MapKind::rho:
      if (map.n < 4 || map.n % 2 != 0)
        throw std::invalid_argument("rho needs an even index");
      return SpaceLabel::F(map.n);
  }
  throw std::logic_error("unhandled map kind");
}

namespace {

// image of one codomain basis vector under the pullback of `map`
DivisorClass generator_pullback(const MapLabel& map, const SpaceLabel& dom,
                                const std::string& name) {
  DivisorClass out = DivisorClass::zero(dom);
  if (name == "lambda") {
    out.set("lambda", 1);
    return out;
  }
  int res = map.n % 8;
  switch (map.kind) {
    case MapKind::f:
      if (name == "Hn") {
        out.set("Hn", 1);
        out.addto("Hh", 2);
        if (res == 5) out.addto("Hu", 1);
      } else if (name == "Hh") {
        out.set("lambda", -2);
        out.addto("Hh", 1);
        if (res == 4) out.addto("Hu", 1);
      } else if (name == "Hu") {
        if (res == 5) out.addto("Hu", 1);
        else if (res != 3) out.addto("Hu", 2);
        // res 3: the target has no unigonal divisor, the image is 0
      }
      return out;
    case MapKind::l:
      if (name == "Hn") out.set("Hn", 1);
      else if (name == "Hu") out.set("lambda", -2);
      // Hh contracts to a point in the II-space: image 0
      return out;
    case MapKind::m:
      if (name == "Hn") out.set("Hn", 1);
      else if (name == "Hh") out.set("Hu", 2);
      else if (name == "Hu") {
        out.set("lambda", -2);
        out.addto("Hu", 1);
      }
      return out;
    case MapKind::q:
      if (name == "Hn") {
        out.set("Hn", 1);
        out.addto("Hu", 2);
      } else if (name == "Hh") {
        out.set("Hu", 2);
      } else if (name == "Hu") {
        out.set("lambda", -1);
        out.addto("Hu", Rat(3, 2));
      }
      return out;
    case MapKind::p:
      if (name == "Hn") out.set("Hn", 1);
      else if (name == "Hu") out.set("lambda", -2);
      return out;
    case MapKind::r:
      if (name == "Hn") {
        out.set("lambda", 1);
        out.addto("Hn", 1);
        out.addto("Hu", 2);
      } else if (name == "Hu") {
        out.set("lambda", -1);
        out.addto("Hu", 1);
      }
      return out;
    case MapKind::rho:
      if (name == "Hn") out.set("H0", 1);
      else if (name == "Hh") out.set("Hxi", 2);
      else if (name == "Hu") {
        out.set("Hzeta", 1);
        out.set("Hzeta'", 1);
      }
      return out;
  }
  throw std::logic_error("unhandled map kind");
}

}  // namespace

DivisorClass pullback(const MapLabel& map, const DivisorClass& c) {
  SpaceLabel cod = map_codomain(map);
  if (c.space != cod)
    throw std::invalid_argument("class lives on " + c.space.to_string() +
                                ", not on " + cod.to_string());
  SpaceLabel dom = map_domain(map);
  DivisorClass out = DivisorClass::zero(dom);
  auto names = cod.basis();
  for (size_t i = 0; i < names.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    out = out + generator_pullback(map, dom, names[i]).scaled(c.coeffs[i]);
  }
  return out;
}

DivisorClass pushforward_rho(int N, const DivisorClass& c) {
  if (N % 2 != 0) throw std::invalid_argument("stable cover needs N even");
  SpaceLabel dom = SpaceLabel::FStable(N);
  if (c.space != dom)
    throw std::invalid_argument("class lives on " + c.space.to_string() +
                                ", not on " + dom.to_string());
  DivisorClass out = DivisorClass::zero(SpaceLabel::F(N));
  out.set("lambda", 2 * c.coeff("lambda"));
  out.set("Hn", 2 * c.coeff("H0"));
  out.set("Hh", c.coeff("Hxi"));
  Rat uni = c.coeff("Hzeta") + c.coeff("Hzeta'");
  if (out.has("Hu")) {
    out.set("Hu", uni);
  } else if (uni != 0) {
    throw std::invalid_argument("no unigonal divisor class on " +
                                out.space.to_string());
  }
  return out;
}

DivisorClass canonical_class(const SpaceLabel& space) {
  DivisorClass out = DivisorClass::zero(space);
  switch (space.kind) {
    case SpaceKind::F:
      out.set("lambda", space.n);
      out.set("Hn", Rat(-1, 2));
      out.set("Hh", Rat(-1, 2));
      if (space.n % 8 == 3 || space.n % 8 == 4) out.set("Hu", Rat(-1, 2));
      return out;
    case SpaceKind::FII:
      out.set("lambda", 8 * space.n + 2);
      out.set("Hn", Rat(-1, 2));
      return out;
    case SpaceKind::FIIA1:
      out.set("lambda", 8 * space.n + 3);
      out.set("Hn", Rat(-1, 2));
      out.set("Hu", Rat(-1, 2));
      return out;
    case SpaceKind::FIIA2:
      out.set("lambda", 8 * space.n + 4);
      out.set("Hn", Rat(-1, 2));
      out.set("Hu", Rat(-1, 2));
      return out;
    case SpaceKind::FStable:
      throw std::invalid_argument(
          "no canonical class recorded for the stable cover");
  }
  throw std::logic_error("unhandled space kind");
}

namespace {

DivisorClass polarization(int N, const Rat& beta) {
  DivisorClass out = boundary_divisor(N).scaled(beta);
  out.addto("lambda", 1);
  return out;
}

// closed form of the restriction, dispatched on the path shape
DivisorClass restriction_closed_form(int N, const std::vector<MapLabel>& path,
                                     const Rat& beta) {
  size_t k = 0;
  while (k < path.size() && path[k].kind == MapKind::f) ++k;
  std::string suffix;
  for (size_t i = k; i < path.size(); ++i)
    suffix += to_string(path[i].kind);
  Rat kk = Rat(static_cast<long>(k));
  bool anomalous_start = k == 1 && N % 8 == 4;  // f(N) with N = 4 mod 8

  if (suffix.empty()) {
    int M = N - static_cast<int>(k);
    DivisorClass out = DivisorClass::zero(SpaceLabel::F(M));
    out.set("lambda", 1 - kk * beta);
    if (k >= 1 && M % 8 == 4) {
      // the step into M crossed the unigonal-free residue: only the
      // hyperelliptic half of the boundary survives
      out.addto("Hh", beta / 2);
    } else if (anomalous_start) {
      out = out + boundary_divisor(M).scaled(beta);
      out.addto("Hu", beta);
    } else {
      out = out + boundary_divisor(M).scaled(beta);
    }
    return out;
  }
  if (suffix == "l") {
    DivisorClass out = DivisorClass::zero(map_domain(path.back()));
    out.set("lambda", anomalous_start ? Rat(1 - 4 * beta) : Rat(1 - (kk + 1) * beta));
    return out;
  }
  if (suffix == "m") {
    DivisorClass out = DivisorClass::zero(map_domain(path.back()));
    out.set("lambda", k == 0 ? Rat(1 - beta) : Rat(1 - kk * beta));
    out.set("Hu", k == 0 ? Rat(Rat(3, 2) * beta) : beta);
    return out;
  }
  if (suffix == "mp") {
    DivisorClass out = DivisorClass::zero(map_domain(path.back()));
    out.set("lambda", k == 0 ? Rat(1 - 4 * beta) : Rat(1 - (kk + 2) * beta));
    return out;
  }
  if (suffix == "q") {
    DivisorClass out = DivisorClass::zero(map_domain(path.back()));
    out.set("lambda", 1 - kk * beta);
    out.set("Hu", beta);
    return out;
  }
  if (suffix == "qr") {
    DivisorClass out = DivisorClass::zero(map_domain(path.back()));
    out.set("lambda", 1 - (kk + 1) * beta);
    out.set("Hu", beta);
    return out;
  }
  if (suffix == "qrp") {
    DivisorClass out = DivisorClass::zero(map_domain(path.back()));
    out.set("lambda", 1 - (kk + 3) * beta);
    return out;
  }
  throw std::invalid_argument("path shape " + suffix +
                              " has no recorded closed form");
}

}  // namespace

DivisorClass restrict_polarization(int N, const std::vector<MapLabel>& path,
                                   const Rat& beta) {
  if (beta < 0 || beta > 1)
    throw std::invalid_argument("beta must lie in [0, 1]");
  if (N < 3) throw std::invalid_argument("need N >= 3");
  SpaceLabel expected = SpaceLabel::F(N);
  for (const MapLabel& map : path) {
    if (map.kind == MapKind::rho)
      throw std::invalid_argument("the stable cover is not a tower map");
    if (map_codomain(map) != expected)
      throw std::invalid_argument("path does not compose: " +
                                  map.to_string() + " does not land in " +
                                  expected.to_string());
    expected = map_domain(map);
  }

  DivisorClass cls = polarization(N, beta);
  for (const MapLabel& map : path) cls = pullback(map, cls);

  DivisorClass closed = restriction_closed_form(N, path, beta);
  if (!(cls == closed))
    throw std::logic_error("restriction closed form mismatch on " +
                           cls.space.to_string());
  return cls;
}

const std::vector<std::pair<std::string, QVec>>& curve_rows() {
  static const std::vector<std::pair<std::string, QVec>> rows = {
      {"Gamma1", {Rat(1), Rat(108), Rat(0), Rat(0)}},
      {"Gamma2", {Rat(1), Rat(136), Rat(-2), Rat(0)}},
      {"Gamma3", {Rat(1), Rat(264), Rat(0), Rat(-2)}},
      {"Gamma4", {Rat(1), Rat(80), Rat(2), Rat(0)}},
  };
  return rows;
}

Rat curve_pairing(const std::string& curve, const DivisorClass& c) {
  if (c.space != SpaceLabel::F(19))
    throw std::invalid_argument("curve rows are recorded on F(19)");
  for (const auto& [name, row] : curve_rows()) {
    if (name != curve) continue;
    Rat s = 0;
    for (size_t i = 0; i < row.size(); ++i) s += row[i] * c.coeffs[i];
    return s;
  }
  throw std::invalid_argument("unknown curve " + curve);
}

DivisorClass git_polarization(int N) {
  if (N == 19) return polarization(19, 1);
  if (N == 18) return polarization(18, 1).scaled(2);
  throw std::invalid_argument("no polarization fixture recorded for N = " +
                              std::to_string(N));
}

}  // namespace hkl
