// Divisor-class vocabulary shared across modules: named spaces, exact-rational
// class vectors over a named basis, and linear relations among classes.
#pragma once

#include "hkl/numeric.hpp"

#include <string>
#include <vector>

namespace hkl {

enum class SpaceKind { F, FII, FIIA1, FIIA2, FStable };

// F(N) / FStable(N) carry the tower index N; the II-family spaces carry k.
struct SpaceLabel {
  SpaceKind kind;
  int n;

  static SpaceLabel F(int N) { return {SpaceKind::F, N}; }
  static SpaceLabel FII(int k) { return {SpaceKind::FII, k}; }
  static SpaceLabel FIIA1(int k) { return {SpaceKind::FIIA1, k}; }
  static SpaceLabel FIIA2(int k) { return {SpaceKind::FIIA2, k}; }
  static SpaceLabel FStable(int N) { return {SpaceKind::FStable, N}; }

  bool operator==(const SpaceLabel& o) const {
    return kind == o.kind && n == o.n;
  }
  bool operator!=(const SpaceLabel& o) const { return !(*this == o); }

  // F(N) loses the unigonal coordinate when N == 2 mod 8
  std::vector<std::string> basis() const {
    switch (kind) {
      case SpaceKind::F:
        if (((n % 8) + 8) % 8 == 2) return {"lambda", "Hn", "Hh"};
        return {"lambda", "Hn", "Hh", "Hu"};
      case SpaceKind::FII:
        return {"lambda", "Hn"};
      case SpaceKind::FIIA1:
      case SpaceKind::FIIA2:
        return {"lambda", "Hn", "Hu"};
      case SpaceKind::FStable:
        return {"lambda", "H0", "Hxi", "Hzeta", "Hzeta'"};
    }
    throw std::logic_error("unreachable");
  }

  std::string to_string() const {
    switch (kind) {
      case SpaceKind::F: return "F(" + std::to_string(n) + ")";
      case SpaceKind::FII: return "FII(" + std::to_string(n) + ")";
      case SpaceKind::FIIA1: return "FIIA1(" + std::to_string(n) + ")";
      case SpaceKind::FIIA2: return "FIIA2(" + std::to_string(n) + ")";
      case SpaceKind::FStable: return "FStable(" + std::to_string(n) + ")";
    }
    throw std::logic_error("unreachable");
  }
};

struct DivisorClass {
  SpaceLabel space;
  QVec coeffs;  // aligned with space.basis()

  static DivisorClass zero(const SpaceLabel& s) {
    return {s, QVec(s.basis().size(), Rat(0))};
  }

  size_t index_of(const std::string& name) const {
    auto names = space.basis();
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("no coordinate " + name + " on " +
                                space.to_string());
  }
  bool has(const std::string& name) const {
    for (const auto& b : space.basis())
      if (b == name) return true;
    return false;
  }
  const Rat& coeff(const std::string& name) const {
    return coeffs[index_of(name)];
  }
  void set(const std::string& name, const Rat& v) {
    coeffs[index_of(name)] = v;
  }
  void addto(const std::string& name, const Rat& v) {
    coeffs[index_of(name)] += v;
  }
  const Rat& lambda() const { return coeffs[0]; }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Rat& x) { return x == 0; });
  }
  bool operator==(const DivisorClass& o) const {
    return space == o.space && coeffs == o.coeffs;
  }

  DivisorClass operator+(const DivisorClass& o) const {
    if (space != o.space) throw std::invalid_argument("space mismatch");
    DivisorClass r = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
  }
  DivisorClass operator-(const DivisorClass& o) const {
    if (space != o.space) throw std::invalid_argument("space mismatch");
    DivisorClass r = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
  }
  DivisorClass scaled(const Rat& f) const {
    DivisorClass r = *this;
    for (Rat& c : r.coeffs) c *= f;
    return r;
  }
};

// unit class c * <name> on a space
inline DivisorClass unit_class(const SpaceLabel& s, const std::string& name,
                               const Rat& c = Rat(1)) {
  DivisorClass d = DivisorClass::zero(s);
  d.set(name, c);
  return d;
}

// "a λ + b Hn + ..." with zero terms omitted; "0" if empty
inline std::string format_class(const DivisorClass& d) {
  auto names = d.space.basis();
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (d.coeffs[i] == 0) continue;
    std::string label = names[i] == "lambda" ? "\xce\xbb" : names[i];
    std::string c = rat_to_string(d.coeffs[i]);
    if (out.empty()) {
      out = c + " " + label;
    } else if (d.coeffs[i] < 0) {
      out += " - " + rat_to_string(-d.coeffs[i]) + " " + label;
    } else {
      out += " + " + c + " " + label;
    }
  }
  return out.empty() ? "0" : out;
}

// A linear identity lhs_lambda * λ = rhs (rhs has λ-coefficient 0).
struct Relation {
  int N = 0;
  std::string group;       // "decorated" or "stable"
  std::string family;  // "first", "first_bis", "second", "gritsenko"
  Rat lhs_lambda;
  DivisorClass rhs;

  DivisorClass as_zero_class() const {
    DivisorClass z = rhs;
    z.coeffs[0] -= lhs_lambda;
    return z;
  }
};

}  // namespace hkl
