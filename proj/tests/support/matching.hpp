// Helpers for comparing generated relations against transcribed ones.
#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charvar/polynomial.hpp"

namespace matching {

// c with b == c * a, checked on every term; nullopt when no such c exists.
inline std::optional<charvar::Rational> scalar_between(const charvar::TracePolynomial& a,
                                                      const charvar::TracePolynomial& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  charvar::Rational c = b.terms()[0].second / a.terms()[0].second;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms()[i].first != b.terms()[i].first) return std::nullopt;
    if (a.terms()[i].second * c != b.terms()[i].second) return std::nullopt;
  }
  return c;
}

using Named = std::vector<std::pair<std::string, charvar::TracePolynomial>>;

// Reads "name: polynomial" lines; '#' starts a comment line.
inline Named load_named(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Named out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    out.emplace_back(line.substr(0, colon), charvar::parse_polynomial(line.substr(colon + 1)));
  }
  return out;
}

}  // namespace matching
