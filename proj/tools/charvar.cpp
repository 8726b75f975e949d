// charvar: command-line front end for the character variety library.

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "charvar/groebner.hpp"
#include "charvar/io.hpp"
#include "charvar/numeric.hpp"
#include "charvar/relations.hpp"
#include "charvar/traces.hpp"
#include "json.hpp"

using namespace charvar;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 1, kBudget = 2, kVerification = 3 };

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0;

  ExportFormat export_format() const { return parse_format(format); }
  bool json_out() const { return format == "json"; }
};

std::string slurp(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read '" + arg + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// Inline presentations start with '<'; anything else is a file name or '-'.
std::string source_text(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '<') return arg;
  return slurp(arg);
}

void report_vanished(const GroupPresentation& g, const CharVarietyPresentation& p) {
  for (const auto& v : p.vanished_cutouts)
    std::cerr << "note: cut-out relation for relator " << g.relators()[v.relator].to_letters() << " and gamma_" << v.gamma
              << " is identically zero\n";
}

MonomialOrder order_named(const std::string& name) {
  return name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

std::string render_basis(const GroebnerBasis& gb, const Globals& g, std::string base) {
  const auto& b = gb.basis();
  if (g.json_out()) {
    json j = json::parse(base);
    j["groebner_basis"] = json::array();
    for (const auto& p : b) j["groebner_basis"].push_back(p.to_string(gb.order()));
    return j.dump(1) + "\n";
  }
  if (g.format == "algebra_system") {
    base += "-- reduced Groebner basis\nG = {\n";
    for (std::size_t i = 0; i < b.size(); ++i) base += "  " + b[i].to_string(gb.order()) + (i + 1 < b.size() ? ",\n" : "\n");
    return base + "};\n";
  }
  base += "reduced groebner basis (" + std::to_string(b.size()) + ")\n";
  for (const auto& p : b) base += "  " + p.to_string(gb.order()) + "\n";
  return base;
}

std::string presentation_output(const GroupPresentation& group, const Globals& g, bool groebner,
                                const std::string& order, const GroebnerOptions& budget) {
  auto pres = full_presentation(group);
  report_vanished(group, pres);
  std::string out = export_ideal(pres, g.export_format(), group.relators());
  if (!groebner) return out;
  auto all = pres.all_relations();
  GroebnerBasis gb = all.empty() ? GroebnerBasis() : buchberger(PolynomialIdeal(all, order_named(order)), budget);
  return render_basis(gb, g, out);
}

// Free relations at random tuples, cut-out relations at sampled
// representations of the group; indices run over the concatenated list.
VanishingReport check_all(const CharVarietyPresentation& pres, const std::vector<FreeWord>& relators, int trials,
                          double tol, std::uint64_t seed) {
  VanishingReport report;
  report.trials = trials;
  report.tolerance = tol;
  report.polynomials = pres.free_relations.size() + pres.cutout_relations.size();
  if (!pres.free_relations.empty()) {
    auto r = check_vanishing(pres.free_relations, pres.rank, trials, tol, seed);
    report.failures = r.failures;
  }
  if (!pres.cutout_relations.empty()) {
    if (relators.empty()) throw ParseError("cut-out relations given without relators to sample from");
    GroupPresentation group(pres.rank, relators);
    auto r = check_vanishing(pres.cutout_relations, trials, tol, seed,
                             [&](std::uint64_t s) { return sample_representation(group, s); });
    for (auto f : r.failures) {
      f.polynomial += pres.free_relations.size();
      report.failures.push_back(f);
    }
  }
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace coordinates for SL(2,C) character varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "algebra_system"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Base seed for random points")->capture_default_str();

  std::string src, src_b, order = "grevlex";
  bool groebner = false;
  GroebnerOptions budget;
  int rank = 0, trials = 100, max_factors = 3;
  double tol = 1e-8;
  std::string word;

  auto* presentation = app.add_subcommand("presentation", "Free and cut-out relations of a group presentation");
  presentation->add_option("source", src, "Inline <a,b | ...>, a file, or - for stdin")->required();
  presentation->add_flag("--groebner", groebner, "Append the reduced Groebner basis");
  presentation->add_option("--order", order)->check(CLI::IsMember({"lex", "grevlex"}))->capture_default_str();
  presentation->add_option("--max-pairs", budget.max_pairs, "Groebner pair budget")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Trace polynomial of a word");
  reduce->add_option("word", word, "Letters (aBc), [1,-2,3] or Word[...]")->required();
  reduce->add_option("--rank", rank, "Rank of the free group (default: largest letter)");

  auto* free = app.add_subcommand("free-relations", "Relations among the trace generators of F_r");
  free->add_option("rank", rank)->required()->check(CLI::PositiveNumber);

  auto* psl2 = app.add_subcommand("psl2-gens", "Monomials generating the PSL(2,C) coordinate ring");
  psl2->add_option("rank", rank)->required()->check(CLI::PositiveNumber);
  psl2->add_option("--max-factors", max_factors)->capture_default_str()->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Numerically check that relations vanish");
  check->add_option("source", src, "Presentation, or json written by 'presentation'")->required();
  check->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);
  check->add_option("--tol", tol)->capture_default_str();

  auto* jac = app.add_subcommand("jacobian", "Jacobian test of algebraic independence");
  jac->add_option("rank", rank)->required()->check(CLI::Range(2, 64));

  auto* snappy = app.add_subcommand("from-snappy", "Batch mode over SnapPy fundamental group blocks");
  snappy->add_option("file", src, "File or - for stdin")->required();
  snappy->add_flag("--groebner", groebner, "Append the reduced Groebner basis");
  snappy->add_option("--order", order)->check(CLI::IsMember({"lex", "grevlex"}))->capture_default_str();

  auto* radical = app.add_subcommand("radical-equal", "Compare radicals of two ideals given as json");
  radical->add_option("a", src)->required();
  radical->add_option("b", src_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*presentation) {
      auto group = parse_source(classify_source(source_text(src)));
      std::cout << presentation_output(group, g, groebner, order, budget);
      return kOk;
    }
    if (*reduce) {
      int r = rank;
      if (r == 0) {
        for (int x : parse_word(word, 26).letters()) r = std::max(r, std::abs(x));
        r = std::max(r, 1);
      }
      FreeWord w = parse_word(word, r);
      auto p = reduce_trace(w);
      if (g.json_out())
        std::cout << json{{"word", w.to_string()}, {"trace", p.to_string()}}.dump(1) << "\n";
      else
        std::cout << p.to_string() << "\n";
      return kOk;
    }
    if (*free) {
      CharVarietyPresentation pres;
      pres.rank = rank;
      pres.generators = generators(rank);
      pres.free_relations = free_relations(rank);
      std::cout << export_ideal(pres, g.export_format());
      return kOk;
    }
    if (*psl2) {
      auto gens = psl2_generators(rank, max_factors);
      if (g.json_out()) {
        json j = json::array();
        for (const auto& m : gens) j.push_back(m.to_string());
        std::cout << j.dump(1) << "\n";
      } else {
        for (const auto& m : gens) std::cout << m.to_string() << "\n";
      }
      return kOk;
    }
    if (*check) {
      std::string text = source_text(src);
      CharVarietyPresentation pres;
      std::vector<FreeWord> relators;
      if (text.find_first_not_of(" \t\n") != std::string::npos && text[text.find_first_not_of(" \t\n")] == '{') {
        auto imported = import_ideal_json(text);
        pres = std::move(imported.presentation);
        relators = std::move(imported.relators);
      } else {
        auto group = parse_source(classify_source(text));
        pres = full_presentation(group);
        relators = group.relators();
      }
      auto report = check_all(pres, relators, trials, tol, g.seed);
      if (g.json_out())
        std::cout << report.to_json() << "\n";
      else
        std::cout << "relations " << report.polynomials << " trials " << report.trials << " failures "
                  << report.failures.size() << "\n"
                  << report.to_text();
      return report.ok() ? kOk : kVerification;
    }
    if (*jac) {
      double v = jacobian_independence(rank, g.seed);
      bool independent = v > 1e-6;
      if (g.json_out())
        std::cout << json{{"rank", rank}, {"seed", g.seed}, {"abs_det", v}, {"independent", independent}}.dump(1)
                  << "\n";
      else
        std::cout << "rank " << rank << " seed " << g.seed << " |det J| " << v
                  << (independent ? " independent" : " dependent") << "\n";
      return independent ? kOk : kVerification;
    }
    if (*snappy) {
      auto groups = parse_snappy(slurp(src));
      std::vector<std::future<std::string>> jobs;
      for (const auto& group : groups)
        jobs.push_back(std::async(std::launch::async, [&, group] { return presentation_output(group, g, groebner, order, budget); }));
      for (std::size_t k = 0; k < jobs.size(); ++k) std::cout << "=== manifold " << k + 1 << " ===\n" << jobs[k].get();
      return kOk;
    }
    if (*radical) {
      auto a = import_ideal_json(slurp(src)).presentation.all_relations();
      auto b = import_ideal_json(slurp(src_b)).presentation.all_relations();
      bool eq = radical_equal(PolynomialIdeal(a), PolynomialIdeal(b));
      if (g.json_out())
        std::cout << json{{"radical_equal", eq}}.dump() << "\n";
      else
        std::cout << (eq ? "true" : "false") << "\n";
      return eq ? kOk : kVerification;
    }
  } catch (const GroebnerLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
