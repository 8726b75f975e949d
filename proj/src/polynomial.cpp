#include "charvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "charvar/word.hpp"

namespace charvar {

// ---------------------------------------------------------------------------
// TraceVariable

TraceVariable::TraceVariable(std::initializer_list<int> indices)
    : TraceVariable(std::span<const int>(indices.begin(), indices.size())) {}

TraceVariable::TraceVariable(std::span<const int> indices) {
  if (indices.empty() || indices.size() > 3)
    throw std::invalid_argument("trace variable needs 1 to 3 indices");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) throw std::invalid_argument("trace variable index must be positive");
    if (i && indices[i] <= indices[i - 1])
      throw std::invalid_argument("trace variable indices must be strictly increasing");
    indices_[i] = indices[i];
  }
  length_ = static_cast<int>(indices.size());
}

TraceVariable TraceVariable::auxiliary(int id) {
  TraceVariable v;
  v.indices_[0] = id;
  v.length_ = 0;
  return v;
}

std::string TraceVariable::to_string() const {
  if (is_auxiliary()) return "u" + std::to_string(indices_[0]);
  std::string out = "t{";
  for (int i = 0; i < length_; ++i) {
    if (i) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (auto& f : factors_) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  factors_ = std::move(merged);
}

Monomial Monomial::of(const TraceVariable& v, std::uint32_t exponent) {
  Monomial m;
  if (exponent) m.factors_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::exponent(const TraceVariable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const TraceVariable& x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->first < f.first) ++it;
    if (it == other.factors_.end() || it->first != f.first || it->second < f.second) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  auto it = factors_.begin();
  for (const auto& f : other.factors_) {
    while (it != factors_.end() && it->first < f.first) ++it;
    std::uint32_t sub = (it != factors_.end() && it->first == f.first) ? it->second : 0;
    if (sub > f.second) throw std::invalid_argument("monomial does not divide");
    if (f.second > sub) q.factors_.emplace_back(f.first, f.second - sub);
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.factors_.reserve(x.factors_.size() + y.factors_.size());
  auto a = x.factors_.begin(), b = y.factors_.begin();
  while (a != x.factors_.end() || b != y.factors_.end()) {
    if (b == y.factors_.end() || (a != x.factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == x.factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.to_string();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<TraceVariable> ranking)
    : kind_(kind), ranking_(std::move(ranking)) {
  for (std::size_t i = 0; i < ranking_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (ranking_[i] == ranking_[j]) throw std::invalid_argument("duplicate variable in ranking");
}

std::optional<std::size_t> MonomialOrder::position(const TraceVariable& v) const {
  for (std::size_t i = 0; i < ranking_.size(); ++i)
    if (ranking_[i] == v) return i;
  return std::nullopt;
}

bool MonomialOrder::ranks_above(const TraceVariable& a, const TraceVariable& b) const {
  if (a.is_auxiliary() || b.is_auxiliary() || ranking_.empty()) return b < a;
  auto pa = position(a), pb = position(b);
  if (pa && pb) return *pa < *pb;
  if (pa) return true;
  if (pb) return false;
  return b < a;
}

namespace {

using RankedFactor = std::pair<TraceVariable, std::uint32_t>;

// Lex comparison of two factor lists already sorted from most to least
// significant variable.
std::strong_ordering lex_walk(const std::vector<RankedFactor>& a, const std::vector<RankedFactor>& b,
                              const MonomialOrder& order) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second <=> b[j].second;
      ++i;
      ++j;
    } else if (order.ranks_above(a[i].first, b[j].first)) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < a.size()) return std::strong_ordering::greater;
  if (j < b.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// Reverse-lex tie break: compare from the least significant variable; the
// monomial with the smaller exponent there is larger.
std::strong_ordering revlex_walk(const std::vector<RankedFactor>& a,
                                 const std::vector<RankedFactor>& b, const MonomialOrder& order) {
  std::size_t i = a.size(), j = b.size();
  while (i > 0 && j > 0) {
    const auto& fa = a[i - 1];
    const auto& fb = b[j - 1];
    if (fa.first == fb.first) {
      if (fa.second != fb.second) return fb.second <=> fa.second;
      --i;
      --j;
    } else if (order.ranks_above(fb.first, fa.first)) {
      // a has a lower variable that b lacks
      return std::strong_ordering::less;
    } else {
      return std::strong_ordering::greater;
    }
  }
  if (i > 0) return std::strong_ordering::less;
  if (j > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void split_ranked(const Monomial& m, const MonomialOrder& order, std::vector<RankedFactor>& aux,
                  std::vector<RankedFactor>& main, std::uint32_t& main_degree) {
  aux.clear();
  main.clear();
  main_degree = 0;
  for (const auto& f : m.factors()) {
    if (f.first.is_auxiliary()) {
      aux.push_back(f);
    } else {
      main.push_back(f);
      main_degree += f.second;
    }
  }
  auto by_rank = [&](const RankedFactor& x, const RankedFactor& y) {
    return order.ranks_above(x.first, y.first);
  };
  std::sort(aux.begin(), aux.end(), by_rank);
  std::sort(main.begin(), main.end(), by_rank);
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  thread_local std::vector<RankedFactor> aa, am, ba, bm;
  std::uint32_t da = 0, db = 0;
  split_ranked(a, *this, aa, am, da);
  split_ranked(b, *this, ba, bm, db);
  if (auto c = lex_walk(aa, ba, *this); c != 0) return c;
  if (kind_ == OrderKind::lex) return lex_walk(am, bm, *this);
  if (da != db) return da <=> db;
  return revlex_walk(am, bm, *this);
}

// ---------------------------------------------------------------------------
// TracePolynomial

TracePolynomial::TracePolynomial(const Rational& constant) {
  Rational c = constant;
  c.canonicalize();
  if (c != 0) terms_.emplace_back(Monomial(), std::move(c));
}

TracePolynomial::TracePolynomial(int constant) : TracePolynomial(Rational(constant)) {}

TracePolynomial::TracePolynomial(const TraceVariable& v) {
  terms_.emplace_back(Monomial::of(v), Rational(1));
}

TracePolynomial::TracePolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  normalize();
}

void TracePolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    t.second.canonicalize();
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

bool TracePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

std::uint32_t TracePolynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

Rational TracePolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  return it != terms_.end() && it->first == m ? it->second : Rational(0);
}

std::vector<TraceVariable> TracePolynomial::variables() const {
  std::vector<TraceVariable> vars;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors()) vars.push_back(f.first);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

const TracePolynomial::Term& TracePolynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.compare(t.first, best->first) > 0) best = &t;
  return *best;
}

std::vector<TracePolynomial::Term> TracePolynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
  return out;
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& other) {
  if (this == &other) return *this += TracePolynomial(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& other) {
  return *this += -other;
}

TracePolynomial operator-(TracePolynomial a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<TracePolynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
  return TracePolynomial(std::move(out));
}

TracePolynomial& TracePolynomial::operator*=(const TracePolynomial& other) {
  *this = *this * other;
  return *this;
}

TracePolynomial& TracePolynomial::scale(const Rational& scalar) {
  Rational s = scalar;
  s.canonicalize();
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

TracePolynomial TracePolynomial::scaled(const Rational& scalar) const {
  TracePolynomial out = *this;
  out.scale(scalar);
  return out;
}

TracePolynomial TracePolynomial::pow(unsigned exponent) const {
  TracePolynomial result(1), base = *this;
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

TracePolynomial TracePolynomial::multiply_monomial(const Monomial& m, const Rational& c) const {
  Rational k = c;
  k.canonicalize();
  if (k == 0) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, coef] : terms_) out.emplace_back(mono * m, coef * k);
  return TracePolynomial(std::move(out));
}

std::string TracePolynomial::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : sorted_terms(order)) {
    Rational mag = abs(coef);
    bool negative = coef < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mono.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

TracePolynomial primitive_part(const TracePolynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("primitive_part of zero polynomial");
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_class d = t.second.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  for (const auto& t : p.terms()) {
    mpz_class n = t.second.get_num() * (den_lcm / t.second.get_den());
    num_gcd = gcd(num_gcd, n);
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading_term(order).second < 0) factor = -factor;
  return p.scaled(factor);
}

std::complex<double> evaluate(const TracePolynomial& p, const Assignment& assignment) {
  std::complex<double> sum = 0;
  for (const auto& [mono, coef] : p.terms()) {
    std::complex<double> term = coef.get_d();
    for (const auto& [v, e] : mono.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::out_of_range("no value assigned to " + v.to_string());
      for (std::uint32_t k = 0; k < e; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

double max_term_magnitude(const TracePolynomial& p, const Assignment& assignment) {
  double best = 0;
  for (const auto& [mono, coef] : p.terms()) {
    double mag = std::abs(coef.get_d());
    for (const auto& [v, e] : mono.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::out_of_range("no value assigned to " + v.to_string());
      mag *= std::pow(std::abs(it->second), static_cast<double>(e));
    }
    best = std::max(best, mag);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text,
                   const std::map<std::string, TraceVariable, std::less<>>& aliases)
      : text_(text), aliases_(aliases) {}

  TracePolynomial parse() {
    TracePolynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

  TraceVariable variable_only() {
    skip_ws();
    TraceVariable v = variable();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TracePolynomial expression() {
    TracePolynomial acc = product();
    for (;;) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        return acc;
    }
  }

  TracePolynomial product() {
    TracePolynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  TracePolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  TracePolynomial power() {
    TracePolynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  TracePolynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      TracePolynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        mpz_class d(den);
        if (d == 0) fail("zero denominator");
        Rational q(num, d);
        q.canonicalize();
        return TracePolynomial(q);
      }
      return TracePolynomial(Rational(num));
    }
    return TracePolynomial(variable());
  }

  TraceVariable variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) fail("expected variable");
    if (name == "t" && pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      std::vector<int> idx;
      for (;;) {
        skip_ws();
        std::string digits = read_digits();
        if (digits.empty()) fail("expected index in t{...}");
        idx.push_back(std::stoi(digits));
        if (accept(',')) continue;
        if (accept('}')) break;
        fail("expected ',' or '}'");
      }
      try {
        return TraceVariable(std::span<const int>(idx));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (auto it = aliases_.find(name); it != aliases_.end()) return it->second;
    if (name.size() > 1 && name[0] == 'u' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      return TraceVariable::auxiliary(std::stoi(std::string(name.substr(1))));
    fail("unknown variable '" + std::string(name) + "'");
  }

  std::string_view text_;
  const std::map<std::string, TraceVariable, std::less<>>& aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

TracePolynomial parse_polynomial(std::string_view text,
                                 const std::map<std::string, TraceVariable, std::less<>>& aliases) {
  return PolynomialParser(text, aliases).parse();
}

TraceVariable parse_variable(std::string_view text) {
  static const std::map<std::string, TraceVariable, std::less<>> none;
  return PolynomialParser(text, none).variable_only();
}

}  // namespace charvar

std::size_t std::hash<charvar::Monomial>::operator()(const charvar::Monomial& m) const noexcept {
  std::size_t h = 0;
  for (const auto& [v, e] : m.factors()) {
    std::size_t x = static_cast<std::size_t>(v.length()) * 1000003u;
    for (int i : v.indices()) x = x * 131 + static_cast<std::size_t>(i);
    if (v.is_auxiliary()) x ^= static_cast<std::size_t>(v.auxiliary_id()) * 7919u + 17u;
    x = x * 31 + e;
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
