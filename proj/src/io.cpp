#include "charvar/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace charvar {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// letter -> generator index, from a list such as "a,b,c"
std::map<char, int> generator_letters(std::string_view list) {
  std::map<char, int> out;
  if (trim(list).empty()) throw ParseError("empty generator list");
  for (auto g : split(list, ',')) {
    if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
      throw ParseError("generator must be a single lowercase letter: '" + std::string(g) + "'");
    if (out.count(g[0])) throw ParseError("duplicate generator '" + std::string(g) + "'");
    int index = static_cast<int>(out.size()) + 1;
    out[g[0]] = index;
  }
  return out;
}

FreeWord relator_word(std::string_view text, const std::map<char, int>& gens) {
  std::vector<int> letters;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = gens.find(lower);
    if (!std::isalpha(static_cast<unsigned char>(c)) || it == gens.end())
      throw ParseError("relator uses unknown letter '" + std::string(1, c) + "'");
    letters.push_back(std::isupper(static_cast<unsigned char>(c)) ? -it->second : it->second);
  }
  return FreeWord(std::move(letters), static_cast<int>(gens.size()));
}

GroupPresentation build(const std::map<char, int>& gens, const std::vector<std::string_view>& relators) {
  std::vector<FreeWord> words;
  for (auto r : relators)
    if (!r.empty()) words.push_back(relator_word(r, gens));
  return GroupPresentation(static_cast<int>(gens.size()), std::move(words));
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto l : split(text, '\n')) out.push_back(l);
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '<' || text.back() != '>')
    throw ParseError("presentation must have the form <generators | relators>");
  text = text.substr(1, text.size() - 2);
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("presentation is missing '|'");
  auto gens = generator_letters(text.substr(0, bar));
  std::string_view rels = trim(text.substr(bar + 1));
  return build(gens, rels.empty() ? std::vector<std::string_view>{} : split(rels, ','));
}

std::vector<GroupPresentation> parse_snappy(std::string_view text) {
  std::vector<GroupPresentation> out;
  auto lines = lines_of(text);
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() && lines[i].empty()) ++i;
  };
  skip_blank();
  if (i == lines.size()) throw ParseError("no 'Generators:' section found");
  while (i < lines.size()) {
    if (!starts_with(lines[i], "Generators:")) throw ParseError("expected 'Generators:' but found '" + std::string(lines[i]) + "'");
    std::string_view list = trim(lines[i].substr(11));
    ++i;
    if (list.empty()) {
      skip_blank();
      if (i == lines.size()) throw ParseError("generator list missing");
      list = lines[i++];
    }
    auto gens = generator_letters(list);
    skip_blank();
    if (i == lines.size() || !starts_with(lines[i], "Relators:")) throw ParseError("missing 'Relators:' section");
    std::vector<std::string_view> relators;
    for (auto r : split(trim(lines[i].substr(9)), ' '))
      if (!r.empty()) relators.push_back(r);
    ++i;
    while (i < lines.size() && !starts_with(lines[i], "Generators:")) {
      if (!lines[i].empty()) relators.push_back(lines[i]);
      ++i;
    }
    out.push_back(build(gens, relators));
  }
  return out;
}

PresentationSource classify_source(std::string text) {
  PresentationSource s;
  s.kind = text.find("Generators:") != std::string::npos ? PresentationSource::Kind::snappy_text
                                                         : PresentationSource::Kind::inline_text;
  s.payload = std::move(text);
  return s;
}

GroupPresentation parse_source(const PresentationSource& source) {
  if (trim(source.payload).empty()) throw ParseError("empty presentation source");
  if (source.kind == PresentationSource::Kind::inline_text) return parse_presentation(source.payload);
  auto all = parse_snappy(source.payload);
  if (all.size() != 1) throw ParseError("expected exactly one SnapPy block, found " + std::to_string(all.size()));
  return all.front();
}

ExportFormat parse_format(std::string_view name) {
  if (name == "text") return ExportFormat::text;
  if (name == "json") return ExportFormat::json;
  if (name == "algebra_system") return ExportFormat::algebra_system;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

namespace {

std::vector<TraceVariable> variable_list(const CharVarietyPresentation& pres) {
  std::set<TraceVariable> extra;
  for (const auto& p : pres.all_relations())
    for (const auto& v : p.variables()) extra.insert(v);
  std::vector<TraceVariable> vars = pres.generators;
  for (const auto& v : vars) extra.erase(v);
  vars.insert(vars.end(), extra.begin(), extra.end());
  return vars;
}

json polynomial_json(const TracePolynomial& p, const std::vector<TraceVariable>& vars) {
  json terms = json::array();
  for (const auto& [m, c] : p.sorted_terms(MonomialOrder())) {
    json exps = json::array();
    for (const auto& v : vars) exps.push_back(m.exponent(v));
    terms.push_back({exps, c.get_num().get_str(), c.get_den().get_str()});
  }
  return terms;
}

TracePolynomial polynomial_from_json(const json& terms, const std::vector<TraceVariable>& vars) {
  if (terms.is_string()) return parse_polynomial(terms.get<std::string>());
  std::vector<TracePolynomial::Term> out;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3) throw ParseError("term must be [exponents, numerator, denominator]");
    const auto& exps = t[0];
    if (exps.size() != vars.size()) throw ParseError("exponent list does not match the generator list");
    std::vector<Monomial::Factor> factors;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      auto e = exps[k].get<std::uint32_t>();
      if (e) factors.emplace_back(vars[k], e);
    }
    std::sort(factors.begin(), factors.end());
    Rational c(mpz_class(t[1].get<std::string>()), mpz_class(t[2].get<std::string>()));
    c.canonicalize();
    out.emplace_back(Monomial(std::move(factors)), c);
  }
  return TracePolynomial(std::move(out));
}

std::string joined_variables(const std::vector<TraceVariable>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i].to_string();
  return out;
}

}  // namespace

std::string export_ideal(const CharVarietyPresentation& pres, ExportFormat format,
                         const std::vector<FreeWord>& relators) {
  const auto vars = variable_list(pres);
  std::ostringstream os;
  switch (format) {
    case ExportFormat::text: {
      os << "rank " << pres.rank << "\n";
      os << "generators (" << pres.generators.size() << "): " << joined_variables(pres.generators) << "\n";
      os << "free relations (" << pres.free_relations.size() << ")\n";
      for (const auto& p : pres.free_relations) os << "  " << p.to_string() << "\n";
      os << "cut-out relations (" << pres.cutout_relations.size() << ")\n";
      for (const auto& p : pres.cutout_relations) os << "  " << p.to_string() << "\n";
      break;
    }
    case ExportFormat::json: {
      json j;
      j["rank"] = pres.rank;
      j["generators"] = json::array();
      for (const auto& v : vars) j["generators"].push_back(v.to_string());
      j["free_relations"] = json::array();
      for (const auto& p : pres.free_relations) j["free_relations"].push_back(polynomial_json(p, vars));
      j["cutout_relations"] = json::array();
      for (const auto& p : pres.cutout_relations) j["cutout_relations"].push_back(polynomial_json(p, vars));
      if (!relators.empty()) {
        j["relators"] = json::array();
        for (const auto& r : relators) j["relators"].push_back(r.letters());
      }
      os << j.dump(1) << "\n";
      break;
    }
    case ExportFormat::algebra_system: {
      os << "R = QQ[" << joined_variables(vars) << "];\n";
      auto all = pres.all_relations();
      if (all.empty()) {
        os << "I = ideal(0_R);\n";
        break;
      }
      os << "I = ideal(\n";
      for (std::size_t i = 0; i < all.size(); ++i) os << "  " << all[i].to_string() << (i + 1 < all.size() ? ",\n" : "\n");
      os << ");\n";
      break;
    }
  }
  return os.str();
}

ImportedIdeal import_ideal_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid json: ") + e.what());
  }
  ImportedIdeal out;
  auto& pres = out.presentation;
  try {
    if (j.contains("relations")) {
      for (const auto& s : j.at("relations")) pres.free_relations.push_back(parse_polynomial(s.get<std::string>()));
      int rank = 1;
      for (const auto& p : pres.free_relations)
        for (const auto& v : p.variables()) rank = std::max(rank, v.max_index());
      pres.rank = j.value("rank", rank);
      pres.generators = generators(pres.rank);
      return out;
    }
    pres.rank = j.at("rank").get<int>();
    for (const auto& g : j.at("generators")) pres.generators.push_back(parse_variable(g.get<std::string>()));
    for (const auto& p : j.at("free_relations")) pres.free_relations.push_back(polynomial_from_json(p, pres.generators));
    for (const auto& p : j.at("cutout_relations"))
      pres.cutout_relations.push_back(polynomial_from_json(p, pres.generators));
    if (j.contains("relators"))
      for (const auto& r : j.at("relators")) out.relators.emplace_back(r.get<std::vector<int>>(), pres.rank);
  } catch (const json::exception& e) {
    throw ParseError(std::string("unexpected json layout: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

}  // namespace charvar
