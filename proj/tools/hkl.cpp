// hkl — exact calculator for the D-lattice tower: Picard ranks, Heegner
// divisor relations, class pullbacks, mu values, wall predictions, and the
// self-check suite.  All arithmetic is exact; all output is deterministic.
//
// exit codes: 0 ok, 2 self-check or internal-consistency failure,
//             64 usage/parse/range error

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hkl/borcherds.hpp"
#include "hkl/checks.hpp"
#include "hkl/divisor.hpp"
#include "hkl/picard.hpp"
#include "hkl/predictions.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace hkl;

namespace {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// forgiving reader for "a*lambda + b/c*Hn - ..." over the space's basis
DivisorClass parse_class(const SpaceLabel& space, const std::string& text) {
  DivisorClass out = DivisorClass::zero(space);
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  auto fail = [&]() -> DivisorClass& {
    throw std::invalid_argument("cannot parse class expression: expected "
                                "\"a*lambda + b*Hn + ...\" with rational "
                                "coefficients, got \"" + text + "\"");
  };
  skip();
  if (i == text.size()) fail();
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    size_t start = i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    if (i == start) fail();
    Int num(text.substr(start, i - start));
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
      ++i;
      start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      if (i == start) fail();
      den = Int(text.substr(start, i - start));
      if (den == 0) fail();
    }
    skip();
    if (i == text.size() || text[i] != '*') fail();
    ++i;
    skip();
    start = i;
    while (i < text.size() &&
           (std::isalnum((unsigned char)text[i]) || text[i] == '\'')) ++i;
    if (i == start) fail();
    std::string name = text.substr(start, i - start);
    out.addto(name, Rat(sign * num, den));  // unknown names throw here
    skip();
  }
  return out;
}

ordered_json class_json(const DivisorClass& c) {
  ordered_json j = ordered_json::object();
  auto names = c.space.basis();
  for (size_t i = 0; i < names.size(); ++i) j[names[i]] = rat_str(c.coeffs[i]);
  return j;
}

// --- rank ----------------------------------------------------------------

int cmd_rank(int min, int max, const std::string& fmt) {
  if (min < 3 || min > max) {
    std::cerr << "error: need 3 <= min <= max\n";
    return 64;
  }
  std::vector<RankReport> rows;
  for (int N = min; N <= max; ++N) rows.push_back(picard_rank(N));
  if (fmt == "json") {
    for (const RankReport& r : rows) {
      ordered_json j{{"N", r.N},
                     {"rank", (long long)r.rank},
                     {"d", r.d},
                     {"alpha1", rat_str(r.alpha1)},
                     {"alpha2", rat_str(r.alpha2)},
                     {"alpha3", rat_str(r.alpha3)},
                     {"alpha4", rat_str(r.alpha4)},
                     {"dim", (long long)r.dim_cusp}};
      std::cout << j.dump() << "\n";
    }
  } else if (fmt == "tsv") {
    std::cout << "N\td\talpha1\talpha2\talpha3\talpha4\tdim\trank\n";
    for (const RankReport& r : rows)
      std::cout << r.N << "\t" << r.d << "\t" << rat_str(r.alpha1) << "\t"
                << rat_str(r.alpha2) << "\t" << rat_str(r.alpha3) << "\t"
                << rat_str(r.alpha4) << "\t" << r.dim_cusp << "\t" << r.rank
                << "\n";
  } else {
    std::cout << std::setw(3) << "N" << std::setw(4) << "d" << std::setw(10)
              << "alpha1" << std::setw(10) << "alpha2" << std::setw(10)
              << "alpha3" << std::setw(10) << "alpha4" << std::setw(5) << "dim"
              << std::setw(6) << "rank" << "\n";
    for (const RankReport& r : rows)
      std::cout << std::setw(3) << r.N << std::setw(4) << r.d << std::setw(10)
                << rat_str(r.alpha1) << std::setw(10) << rat_str(r.alpha2)
                << std::setw(10) << rat_str(r.alpha3) << std::setw(10)
                << rat_str(r.alpha4) << std::setw(5) << r.dim_cusp
                << std::setw(6) << r.rank << "\n";
  }
  return 0;
}

// --- mu ------------------------------------------------------------------

int cmd_mu(int min, int max, const std::string& fmt) {
  if (min > max) {
    std::cerr << "error: need min <= max\n";
    return 64;
  }
  auto table = mu_table(min, max);
  if (fmt == "json") {
    for (const auto& [N, mu] : table)
      std::cout << ordered_json{{"N", N}, {"mu", (long long)mu}}.dump() << "\n";
  } else if (fmt == "tsv") {
    std::cout << "N\tmu\n";
    for (const auto& [N, mu] : table) std::cout << N << "\t" << mu << "\n";
  } else {
    std::cout << std::setw(3) << "N" << std::setw(5) << "mu" << "\n";
    for (const auto& [N, mu] : table)
      std::cout << std::setw(3) << N << std::setw(5) << mu << "\n";
  }
  return 0;
}

// --- relation ------------------------------------------------------------

int cmd_relation(int n, const std::string& which, const std::string& group,
                 const std::string& decoration, const std::string& fmt) {
  Relation rel;
  if (group == "stable") {
    if (which == "gritsenko")
      throw std::invalid_argument("the gritsenko difference is not recorded "
                                  "in the stable group");
    rel = stable_relation(n, which);
  } else if (which == "first") {
    rel = first_relation(n, decoration);
  } else if (which == "second") {
    rel = second_relation(n);
  } else {
    rel = gritsenko_relation(n);
  }

  // recompute the underlying root counts and compare with the closed forms
  bool consistent = true;
  if (which == "first" || which == "gritsenko")
    consistent &= heegner_coefficients(embed_complement(n, EmbeddingVariant::D))
                      .all_match();
  if (which == "second" || which == "gritsenko")
    consistent &=
        heegner_coefficients(embed_complement(n, EmbeddingVariant::E8D))
            .all_match();

  std::string display;
  if (which == "gritsenko") {
    // normalize 32(14-N) lambda = 16 Hh + c Hu to Hh = ... on the right
    DivisorClass norm = DivisorClass::zero(rel.rhs.space);
    norm.set("lambda", rel.lhs_lambda / 16);
    if (rel.rhs.has("Hu")) norm.set("Hu", -rel.rhs.coeff("Hu") / 16);
    display = "Hh = " + format_class(norm);
  } else {
    display = rat_str(rel.lhs_lambda) + " \xce\xbb = " + format_class(rel.rhs);
  }

  if (fmt == "json") {
    ordered_json j{{"N", rel.N},
                   {"group", rel.group},
                   {"family", rel.family},
                   {"lhs_lambda", rat_str(rel.lhs_lambda)},
                   {"rhs", class_json(rel.rhs)},
                   {"display", display},
                   {"consistent", consistent}};
    std::cout << j.dump() << "\n";
  } else if (fmt == "tsv") {
    auto names = rel.rhs.space.basis();
    std::cout << "N\tgroup\tfamily\tlambda";
    for (const auto& s : names) std::cout << "\t" << s;
    std::cout << "\n" << rel.N << "\t" << rel.group << "\t" << rel.family
              << "\t" << rat_str(rel.lhs_lambda);
    for (size_t i = 0; i < names.size(); ++i)
      std::cout << "\t" << rat_str(rel.rhs.coeffs[i]);
    std::cout << "\n";
  } else {
    std::cout << display << "\n";
  }
  if (!consistent) {
    std::cerr << "error: recomputed root counts disagree with the closed "
                 "forms\n";
    return 2;
  }
  return 0;
}

// --- walls ---------------------------------------------------------------

int cmd_walls(int n, const std::string& fmt) {
  WallReport rep = walls(n);
  if (fmt == "json") {
    ordered_json jwalls = ordered_json::array();
    for (const Wall& w : rep.walls) {
      ordered_json centers = ordered_json::array();
      for (const Stratum& s : w.centers) centers.push_back(s.describe());
      jwalls.push_back(ordered_json{
          {"beta", rat_str(w.beta)}, {"k", w.k}, {"centers", centers}});
    }
    ordered_json j{{"N", rep.N},
                   {"walls", jwalls},
                   {"terminal_contraction", rep.terminal_contraction}};
    std::cout << j.dump() << "\n";
  } else if (fmt == "tsv") {
    std::cout << "beta\tk\tcenters\n";
    for (const Wall& w : rep.walls) {
      std::string line;
      for (const Stratum& s : w.centers)
        line += (line.empty() ? "" : " + ") + s.describe();
      std::cout << rat_str(w.beta) << "\t" << w.k << "\t" << line << "\n";
    }
  } else {
    std::cout << "F(" << rep.N << ") walls:\n";
    for (const Wall& w : rep.walls) {
      std::string line;
      for (const Stratum& s : w.centers)
        line += (line.empty() ? "" : " + ") + s.describe();
      std::cout << "  beta = " << std::left << std::setw(5) << rat_str(w.beta)
                << std::right << " center: " << line << "\n";
    }
    std::cout << rep.terminal_contraction << "\n";
  }
  return 0;
}

// --- pullback ------------------------------------------------------------

int cmd_pullback(const std::string& map, int n, const std::string& expr,
                 const std::string& fmt) {
  MapKind kind;
  if (map == "f") kind = MapKind::f;
  else if (map == "l") kind = MapKind::l;
  else if (map == "m") kind = MapKind::m;
  else if (map == "p") kind = MapKind::p;
  else if (map == "q") kind = MapKind::q;
  else if (map == "r") kind = MapKind::r;
  else if (map == "rho") kind = MapKind::rho;
  else throw std::invalid_argument("unknown map \"" + map +
                                   "\" (one of f, l, m, p, q, r, rho)");
  MapLabel label{kind, n};
  DivisorClass cls = parse_class(map_codomain(label), expr);
  DivisorClass res = pullback(label, cls);
  std::string display =
      format_class(res) + " on " + res.space.to_string();
  if (fmt == "json") {
    ordered_json j{{"map", label.to_string()},
                   {"domain", res.space.to_string()},
                   {"codomain", cls.space.to_string()},
                   {"class", class_json(cls)},
                   {"result", class_json(res)},
                   {"display", display}};
    std::cout << j.dump() << "\n";
  } else if (fmt == "tsv") {
    auto names = res.space.basis();
    std::cout << "space";
    for (const auto& s : names) std::cout << "\t" << s;
    std::cout << "\n" << res.space.to_string();
    for (size_t i = 0; i < names.size(); ++i)
      std::cout << "\t" << rat_str(res.coeffs[i]);
    std::cout << "\n";
  } else {
    std::cout << display << "\n";
  }
  return 0;
}

// --- check ---------------------------------------------------------------

int cmd_check(const std::string& fmt) {
  auto results = run_all_checks();
  size_t passed = 0;
  for (const CheckResult& r : results) passed += r.passed;
  if (fmt == "json") {
    for (const CheckResult& r : results)
      std::cout << ordered_json{{"name", r.name},
                                {"passed", r.passed},
                                {"detail", r.detail}}
                       .dump()
                << "\n";
  } else if (fmt == "tsv") {
    std::cout << "name\tpassed\tdetail\n";
    for (const CheckResult& r : results)
      std::cout << r.name << "\t" << (r.passed ? "1" : "0") << "\t" << r.detail
                << "\n";
  } else {
    for (const CheckResult& r : results)
      std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(20)
                << r.name << std::right << " " << r.detail << "\n";
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return passed == results.size() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for the D-lattice tower: ranks, divisor "
               "relations, pullbacks, walls"};
  app.require_subcommand(1);

  const char* env_fmt = std::getenv("HKL_FORMAT");
  std::string fmt = env_fmt ? env_fmt : "table";

  int rank_min = 3, rank_max = 20;
  auto* rank = app.add_subcommand("rank", "Picard rank table");
  rank->add_option("--min", rank_min, "first index (>= 3)");
  rank->add_option("--max", rank_max, "last index");
  rank->add_option("--format", fmt, "table, json, or tsv");

  int mu_min = 3, mu_max = 25;
  auto* mu = app.add_subcommand("mu", "unigonal coefficients mu(N)");
  mu->add_option("--min", mu_min, "first index (>= 3)");
  mu->add_option("--max", mu_max, "last index (<= 25)");
  mu->add_option("--format", fmt, "table, json, or tsv");

  int rel_n = 0;
  std::string rel_which = "first", rel_group = "decorated", rel_dec = "xi";
  auto* rel = app.add_subcommand("relation", "Heegner divisor relations");
  rel->add_option("--n", rel_n, "tower index")->required();
  rel->add_option("--which", rel_which, "first, second, or gritsenko")
      ->check(CLI::IsMember({"first", "second", "gritsenko"}));
  rel->add_option("--group", rel_group, "decorated or stable")
      ->check(CLI::IsMember({"decorated", "stable"}));
  rel->add_option("--decoration", rel_dec, "xi or zeta (first relation only)")
      ->check(CLI::IsMember({"xi", "zeta"}));
  rel->add_option("--format", fmt, "table, json, or tsv");

  int walls_n = 0;
  auto* wallscmd = app.add_subcommand("walls", "wall-and-center predictions");
  wallscmd->add_option("--n", walls_n, "tower index (>= 15)")->required();
  wallscmd->add_option("--format", fmt, "table, json, or tsv");

  std::string pb_map, pb_class;
  int pb_n = 0;
  auto* pb = app.add_subcommand("pullback", "pull a divisor class back");
  pb->add_option("--map", pb_map, "f, l, m, p, q, r, or rho")->required();
  pb->add_option("--n", pb_n, "map index")->required();
  pb->add_option("--class", pb_class, "e.g. \"1*lambda + 1/2*Hh\"")
      ->required();
  pb->add_option("--format", fmt, "table, json, or tsv");

  auto* check = app.add_subcommand("check", "run the self-check suites");
  bool check_all = false;
  check->add_flag("--all", check_all, "run every suite")->required();
  check->add_option("--format", fmt, "table, json, or tsv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  if (fmt != "table" && fmt != "json" && fmt != "tsv") {
    std::cerr << "error: unknown format \"" << fmt
              << "\" (use table, json, or tsv)\n";
    return 64;
  }

  try {
    if (rank->parsed()) return cmd_rank(rank_min, rank_max, fmt);
    if (mu->parsed()) return cmd_mu(mu_min, mu_max, fmt);
    if (rel->parsed())
      return cmd_relation(rel_n, rel_which, rel_group, rel_dec, fmt);
    if (wallscmd->parsed()) return cmd_walls(walls_n, fmt);
    if (pb->parsed()) return cmd_pullback(pb_map, pb_n, pb_class, fmt);
    if (check->parsed()) return cmd_check(fmt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 64;
}
