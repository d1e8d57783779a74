#include "hkl/borcherds.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace hkl {

std::string to_string(EmbeddingVariant v) {
  return v == EmbeddingVariant::D ? "D" : "E8D";
}

namespace {

// alpha / beta / xi of D_m as dual vectors, in basis coordinates
enum class DualPoint { alpha, beta, xi };

QVec d_dual_in_basis(size_t m, DualPoint which) {
  QVec euclid(m, Rat(1, 2));
  if (which == DualPoint::beta) euclid[0] = Rat(-1, 2);
  if (which == DualPoint::xi) {
    euclid.assign(m, Rat(0));
    euclid[0] = 1;
  }
  QMat bt = transpose(d_euclid_basis(m));
  return solve_rational(bt, euclid);
}

void place(QVec& target, size_t offset, const QVec& part) {
  for (size_t i = 0; i < part.size(); ++i) target[offset + i] = part[i];
}

IMat stack_rows(const IVec& top, const IMat& rest) {
  IMat out(rest.rows + 1, rest.cols);
  for (size_t j = 0; j < rest.cols; ++j) out(0, j) = top[j];
  for (size_t i = 0; i < rest.rows; ++i)
    for (size_t j = 0; j < rest.cols; ++j) out(i + 1, j) = rest(i, j);
  return out;
}

Int weight_polynomial(int N, EmbeddingVariant variant) {
  if (variant == EmbeddingVariant::D)
    return 12 + Int(26 - N) * Int(25 - N);
  return 132 + Int(18 - N) * Int(17 - N);
}

}  // namespace

IVec Embedding::to_ambient(const IVec& base_coords) const {
  size_t n = ambient.rank();
  QVec y(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    if (base_coords[i] == 0) continue;
    for (size_t j = 0; j < n; ++j)
      y[j] += Rat(base_coords[i]) * base_in_ambient(i, j);
  }
  IVec out(n);
  for (size_t j = 0; j < n; ++j) {
    if (den(y[j]) != 1)
      throw std::logic_error("vector does not land in the glued lattice");
    out[j] = num(y[j]);
  }
  return out;
}

Embedding embed_complement(int N, EmbeddingVariant variant) {
  int hi = variant == EmbeddingVariant::D ? 25 : 17;
  if (N < 3 || N > hi)
    throw std::invalid_argument("N out of range for embedding variant " +
                                to_string(variant));
  Embedding e;
  e.N = N;
  e.variant = variant;
  e.a8 = ((N - 3) % 8) + 1;
  e.k = (N - 2 - e.a8) / 8;
  e.c = (variant == EmbeddingVariant::D ? 26 : 18) - N;

  std::vector<Lattice> parts = {make_II(2, 2 + 8 * e.k), make_D(e.a8),
                                make_D(e.c)};
  if (variant == EmbeddingVariant::E8D) parts.push_back(make_E(8));
  Lattice base = direct_sum(parts);
  size_t n = base.rank();
  size_t off_a = 4 + 8 * e.k;
  size_t off_c = off_a + e.a8;

  std::vector<QVec> glue_vecs;
  for (DualPoint p : {DualPoint::alpha, DualPoint::beta, DualPoint::xi}) {
    QVec u(n, Rat(0));
    place(u, off_a, d_dual_in_basis(e.a8, p));
    place(u, off_c, d_dual_in_basis(e.c, p));
    glue_vecs.push_back(u);
  }
  GluedLattice g = glue(base, glue_vecs);
  if (!g.lattice.is_even() || boost::multiprecision::abs(g.lattice.det()) != 1)
    throw std::logic_error("glued overlattice is not even unimodular");
  e.ambient = g.lattice;
  e.ambient.name = "II_2_26";
  e.base_in_ambient = g.old_in_new;

  size_t image_rank = off_c;  // U^2 + E8^k + D_a8 block
  IMat image(image_rank, n);
  IMat old_rows = to_integer(g.old_in_new, "old basis in glued coordinates");
  for (size_t i = 0; i < image_rank; ++i)
    for (size_t j = 0; j < n; ++j) image(i, j) = old_rows(i, j);
  if (!(saturate_rows(image) == hermite_row_basis(image)))
    throw std::logic_error("embedded lattice is not saturated");
  e.image_rows = image;

  e.complement_rows = orthogonal_complement_rows(e.ambient, image);
  e.complement = lattice_of_rows(e.ambient, e.complement_rows,
                                 "complement(" + std::to_string(N) + "," +
                                     to_string(variant) + ")");
  if (boost::multiprecision::abs(e.complement.det()) != 4)
    throw std::logic_error("complement determinant is not 4");
  e.complement_root_count = Int(root_count(e.complement));
  Int expected_roots = Int(2) * e.c * (e.c - 1);
  if (variant == EmbeddingVariant::E8D) expected_roots += 240;
  if (e.complement_root_count != expected_roots)
    throw std::logic_error("complement root fingerprint mismatch");
  return e;
}

namespace {

// embeddings and root counts are deterministic and reused heavily by the
// relation builders, so keep them around
const Embedding& cached_embedding(int N, EmbeddingVariant variant) {
  static std::map<std::pair<int, int>, Embedding> cache;
  auto key = std::make_pair(N, static_cast<int>(variant));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, embed_complement(N, variant)).first;
  return it->second;
}

}  // namespace

Int quasi_pullback_weight(const Embedding& e) {
  Int w = 12 + e.complement_root_count / 2;
  if (w != weight_polynomial(e.N, e.variant))
    throw std::logic_error("quasi-pullback weight mismatch");
  return w;
}

Int quasi_pullback_weight(int N, EmbeddingVariant variant) {
  return quasi_pullback_weight(cached_embedding(N, variant));
}

Int heegner_coefficient(const Embedding& e, const std::string& label) {
  static std::map<std::tuple<int, int, std::string>, Int> cache;
  auto key = std::make_tuple(e.N, static_cast<int>(e.variant), label);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  size_t n_base = e.ambient.rank();
  IVec v(n_base, Int(0));
  size_t off_a = 4 + 8 * e.k;
  if (label == "0") {
    v[0] = 1;
    v[1] = -1;
  } else if (label == "xi") {
    if (e.a8 == 1) {
      v[0] = 2;        // e of the first U
      v[off_a] = 1;    // the D_1 basis vector
    } else {
      QVec euclid(e.a8, Rat(0));
      euclid[0] = 2;
      IVec d = d_from_euclidean(e.a8, euclid);
      for (int i = 0; i < e.a8; ++i) v[off_a + i] = d[i];
    }
  } else if (label == "zeta" || label == "zeta_prime") {
    if ((e.N % 8) == 2)
      throw std::invalid_argument("no unigonal class when N = 2 mod 8");
    Rat entry = (e.N % 2) ? Rat(2) : Rat(1);
    QVec euclid(e.a8, entry);
    if (label == "zeta_prime") euclid[0] = -entry;
    IVec d = d_from_euclidean(e.a8, euclid);
    for (int i = 0; i < e.a8; ++i) v[off_a + i] = d[i];
  } else {
    throw std::invalid_argument("unknown Heegner label " + label);
  }

  IVec v_amb = e.to_ambient(v);
  IMat span = stack_rows(v_amb, e.complement_rows);
  IMat sat = saturate_rows(span);
  Lattice satlat = lattice_of_rows(e.ambient, sat);
  Int roots = Int(root_count(satlat));
  Int excess = roots - e.complement_root_count;
  if (excess < 0 || excess % 2 != 0)
    throw std::logic_error("root-count excess is not a nonnegative even number");
  Int result = excess / 2;
  cache.emplace(key, result);
  return result;
}

const HeegnerCoefficient& HeegnerSet::at(const std::string& label) const {
  for (const auto& h : coeffs)
    if (h.label == label) return h;
  throw std::invalid_argument("no Heegner coefficient " + label);
}

bool HeegnerSet::all_match() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const HeegnerCoefficient& h) { return h.matches(); });
}

HeegnerSet heegner_coefficients(const Embedding& e) {
  HeegnerSet set;
  set.N = e.N;
  set.variant = e.variant;

  HeegnerCoefficient nodal;
  nodal.label = "0";
  nodal.computed = heegner_coefficient(e, "0");
  nodal.expected = 1;
  set.coeffs.push_back(nodal);

  HeegnerCoefficient hyper;
  hyper.label = "xi";
  hyper.computed = heegner_coefficient(e, "xi");
  hyper.expected = Int(2) * e.c;
  set.coeffs.push_back(hyper);

  HeegnerCoefficient uni, uni2;
  uni.label = "zeta";
  uni2.label = "zeta_prime";
  if ((e.N % 8) == 2) {
    uni.note = uni2.note = "no unigonal class (N = 2 mod 8)";
  } else {
    uni.computed = heegner_coefficient(e, "zeta");
    uni2.computed = heegner_coefficient(e, "zeta_prime");
    if (e.variant == EmbeddingVariant::D) {
      uni.expected = uni.computed;
      uni.note = "defines mu(N)";
    } else {
      uni.expected = mu_value(e.N + 8);
    }
    uni2.expected = uni.computed;  // the two unigonal classes must agree
  }
  set.coeffs.push_back(uni);
  set.coeffs.push_back(uni2);
  return set;
}

Int mu_value(int N) {
  if (N < 3 || N > 25)
    throw std::invalid_argument("mu value needs 3 <= N <= 25");
  if ((N % 8) == 2) return 0;
  return heegner_coefficient(cached_embedding(N, EmbeddingVariant::D), "zeta");
}

std::vector<std::pair<int, Int>> mu_table(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty mu range");
  std::vector<std::pair<int, Int>> out;
  for (int N = lo; N <= hi; ++N) out.emplace_back(N, mu_value(N));
  return out;
}

Relation first_relation(int N, const std::string& decoration) {
  if (N < 3 || N > 25)
    throw std::invalid_argument("first relation needs 3 <= N <= 25");
  bool bis = decoration == "zeta";
  if (!bis && decoration != "xi")
    throw std::invalid_argument("unknown decoration " + decoration);
  if (bis && (N % 8) != 6)
    throw std::invalid_argument("decoration zeta needs N = 6 mod 8");

  const Embedding& e = cached_embedding(N, EmbeddingVariant::D);
  Int w = quasi_pullback_weight(e);
  Int a0 = heegner_coefficient(e, "0");
  Int axi = heegner_coefficient(e, "xi");
  Int azeta = (N % 8) == 2 ? Int(0) : heegner_coefficient(e, "zeta");

  Relation r;
  r.N = N;
  r.group = "decorated";
  r.family = bis ? "first_bis" : "first";
  r.lhs_lambda = Rat(2 * w);
  r.rhs = DivisorClass::zero(SpaceLabel::F(N));
  r.rhs.set("Hn", Rat(a0));
  if (bis) {
    r.rhs.set("Hh", Rat(tau(N) * azeta));
    r.rhs.set("Hu", Rat(axi));
  } else {
    r.rhs.set("Hh", Rat(axi));
    if (r.rhs.has("Hu")) r.rhs.set("Hu", Rat(tau(N) * azeta));
  }
  return r;
}

Relation second_relation(int N) {
  if (N < 3 || N > 17)
    throw std::invalid_argument("second relation needs 3 <= N <= 17");
  const Embedding& e = cached_embedding(N, EmbeddingVariant::E8D);
  Int w = quasi_pullback_weight(e);
  Int a0 = heegner_coefficient(e, "0");
  Int axi = heegner_coefficient(e, "xi");
  Int azeta = (N % 8) == 2 ? Int(0) : heegner_coefficient(e, "zeta");

  Relation r;
  r.N = N;
  r.group = "decorated";
  r.family = "second";
  r.lhs_lambda = Rat(2 * w);
  r.rhs = DivisorClass::zero(SpaceLabel::F(N));
  r.rhs.set("Hn", Rat(a0));
  r.rhs.set("Hh", Rat(axi));
  if (r.rhs.has("Hu")) r.rhs.set("Hu", Rat(tau(N) * azeta));
  return r;
}

Relation gritsenko_relation(int N) {
  if (N < 3 || N > 17)
    throw std::invalid_argument("gritsenko relation needs 3 <= N <= 17");
  Relation f = first_relation(N);
  Relation s = second_relation(N);
  Relation r;
  r.N = N;
  r.group = "decorated";
  r.family = "gritsenko";
  r.lhs_lambda = f.lhs_lambda - s.lhs_lambda;
  r.rhs = f.rhs - s.rhs;
  return r;
}

Relation stable_relation(int N, const std::string& which) {
  if (N % 2 != 0)
    throw std::invalid_argument("stable quotient relation needs N even");
  EmbeddingVariant variant;
  if (which == "first") {
    variant = EmbeddingVariant::D;
  } else if (which == "second") {
    variant = EmbeddingVariant::E8D;
  } else {
    throw std::invalid_argument("stable relation is first or second");
  }
  const Embedding& e = cached_embedding(N, variant);
  Int w = quasi_pullback_weight(e);
  Int a0 = heegner_coefficient(e, "0");
  Int axi = heegner_coefficient(e, "xi");
  Int azeta = (N % 8) == 2 ? Int(0) : heegner_coefficient(e, "zeta");

  Relation r;
  r.N = N;
  r.group = "stable";
  r.family = which;
  r.lhs_lambda = Rat(2 * w);
  r.rhs = DivisorClass::zero(SpaceLabel::FStable(N));
  r.rhs.set("H0", Rat(a0));
  // the hyperelliptic reflection swaps the two unigonal classes, so it is
  // not in the stable group: its wall is unramified there
  r.rhs.set("Hxi", Rat(2 * axi));
  r.rhs.set("Hzeta", Rat(tau(N) * azeta));
  r.rhs.set("Hzeta'", Rat(tau(N) * azeta));
  return r;
}

std::vector<std::string> admissible_decorations(int N) {
  if (N < 3 || N > 25)
    throw std::invalid_argument("admissible decorations need 3 <= N <= 25");
  int c = 26 - N;
  Lattice dc = make_D(c);
  FiniteQuadraticForm fqf = discriminant_group(dc);
  auto class_of = [&](DualPoint p) {
    return fqf.class_of_dual(d_dual_in_basis(c, p));
  };
  auto cls_xi = class_of(DualPoint::xi);
  auto cls_alpha = class_of(DualPoint::alpha);
  auto cls_beta = class_of(DualPoint::beta);

  bool has_xi = false, has_zeta = false, has_zeta_prime = false;
  for (const IVec& v : short_vectors(dc, Int(-4))) {
    if (divisibility(dc, v) % 2 != 0) continue;
    QVec half(v.size());
    for (size_t i = 0; i < v.size(); ++i) half[i] = Rat(v[i], 2);
    auto cls = fqf.class_of_dual(half);
    if (cls == cls_xi) has_xi = true;
    if (cls == cls_alpha) has_zeta = true;
    if (cls == cls_beta) has_zeta_prime = true;
  }
  std::vector<std::string> out;
  if (has_xi) out.push_back("xi");
  if (has_zeta) out.push_back("zeta");
  if (has_zeta_prime) out.push_back("zeta_prime");
  return out;
}

}  // namespace hkl
