#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charvar/word.hpp"

namespace charvar {

using Rational = mpq_class;

/// The symbol t_S standing for tr(X_{s1} ... X_{sk}), S strictly increasing
/// with 1 <= |S| <= 3. Auxiliary variables (no index tuple) are used for
/// elimination tricks and always rank above every trace variable.
class TraceVariable {
 public:
  TraceVariable() = default;
  TraceVariable(std::initializer_list<int> indices);
  explicit TraceVariable(std::span<const int> indices);

  static TraceVariable auxiliary(int id);

  bool is_auxiliary() const { return length_ == 0; }
  int auxiliary_id() const { return indices_[0]; }
  std::span<const int> indices() const {
    return {indices_.data(), static_cast<std::size_t>(length_)};
  }
  int length() const { return length_; }
  /// Largest index in S (0 for auxiliary variables).
  int max_index() const { return length_ ? indices_[length_ - 1] : 0; }

  /// "t{1}", "t{1,2}", "t{1,2,3}"; auxiliary variables print as "u0", "u1", ...
  std::string to_string() const;

  /// Default ranking: auxiliary variables on top, then by tuple length, then
  /// lexicographically on the index tuple.
  friend std::strong_ordering operator<=>(const TraceVariable& a, const TraceVariable& b) {
    if (auto c = a.is_auxiliary() <=> b.is_auxiliary(); c != 0) return c;
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.indices_ <=> b.indices_;
  }
  friend bool operator==(const TraceVariable&, const TraceVariable&) = default;

 private:
  std::array<int, 3> indices_{};
  int length_ = 0;
};

/// Product of variables with positive exponents, stored sorted by the default
/// variable ranking.
class Monomial {
 public:
  using Factor = std::pair<TraceVariable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(const TraceVariable& v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(const TraceVariable& v) const;
  std::uint32_t total_degree() const;

  bool divides(const Monomial& other) const;
  /// Requires divides(other) to hold; returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

enum class OrderKind { lex, grevlex };

/// A monomial order: lex or graded reverse lex over a variable ranking.
/// The ranking lists variables from most to least significant; variables not
/// listed rank below all listed ones, in default order among themselves.
/// Auxiliary variables always form a leading lex block.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<TraceVariable> ranking = {});

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }

  OrderKind kind() const { return kind_; }
  const std::vector<TraceVariable>& ranking() const { return ranking_; }

  /// True when variable a ranks strictly above b.
  bool ranks_above(const TraceVariable& a, const TraceVariable& b) const;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::optional<std::size_t> position(const TraceVariable& v) const;

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<TraceVariable> ranking_;
};

/// Exact multivariate polynomial over Q in trace variables. Terms are kept in
/// a fixed storage order with no zero coefficients, so equal polynomials have
/// identical representations.
class TracePolynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  TracePolynomial() = default;
  TracePolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  TracePolynomial(int constant);              // NOLINT(google-explicit-constructor)
  explicit TracePolynomial(const TraceVariable& v);
  explicit TracePolynomial(std::vector<Term> terms);

  static TracePolynomial variable(const TraceVariable& v) { return TracePolynomial(v); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  Rational coefficient(const Monomial& m) const;
  std::vector<TraceVariable> variables() const;

  /// Leading term with respect to an order. Requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  /// Terms sorted in descending order.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  TracePolynomial& operator+=(const TracePolynomial& other);
  TracePolynomial& operator-=(const TracePolynomial& other);
  TracePolynomial& operator*=(const TracePolynomial& other);
  /// Multiplication by a rational scalar.
  TracePolynomial& scale(const Rational& scalar);
  TracePolynomial scaled(const Rational& scalar) const;

  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
  friend TracePolynomial operator-(TracePolynomial a);
  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

  TracePolynomial pow(unsigned exponent) const;
  TracePolynomial multiply_monomial(const Monomial& m, const Rational& c) const;

  /// Canonical text: terms in descending order, e.g. "t{1}^2 - 2".
  std::string to_string(const MonomialOrder& order = MonomialOrder()) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Integer-coefficient multiple of p with unit content and positive leading
/// coefficient under the order. Throws on the zero polynomial.
TracePolynomial primitive_part(const TracePolynomial& p, const MonomialOrder& order = MonomialOrder());

using Assignment = std::map<TraceVariable, std::complex<double>>;

/// Floating-point evaluation. Throws std::out_of_range for unassigned variables.
std::complex<double> evaluate(const TracePolynomial& p, const Assignment& assignment);
/// Largest |c * m(assignment)| over the terms of p.
double max_term_magnitude(const TracePolynomial& p, const Assignment& assignment);

/// Parses sums of products such as "3/2*t{1}^2 - t{1,2}*(t{2} + 1)". Extra
/// identifier names (e.g. "x") can be bound to variables through aliases.
TracePolynomial parse_polynomial(std::string_view text,
                                 const std::map<std::string, TraceVariable, std::less<>>& aliases = {});
TraceVariable parse_variable(std::string_view text);

}  // namespace charvar

template <>
struct std::hash<charvar::Monomial> {
  std::size_t operator()(const charvar::Monomial& m) const noexcept;
};
