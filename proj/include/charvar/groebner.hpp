#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "charvar/polynomial.hpp"

namespace charvar {

/// Raised when Buchberger's algorithm exceeds its pair budget.
class GroebnerLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  /// Number of critical pairs that may be processed before giving up.
  std::size_t max_pairs = 1'000'000;
};

class PolynomialIdeal {
 public:
  PolynomialIdeal() = default;
  /// Throws std::invalid_argument if a generator is zero.
  explicit PolynomialIdeal(std::vector<TracePolynomial> generators, MonomialOrder order = MonomialOrder());

  const std::vector<TracePolynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

 private:
  std::vector<TracePolynomial> generators_;
  MonomialOrder order_;
};

/// Reduced Groebner basis: monic, no term of an element divisible by the
/// leading monomial of another, sorted by descending leading monomial.
class GroebnerBasis {
 public:
  const std::vector<TracePolynomial>& basis() const { return basis_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return basis_.size(); }
  /// True for the basis {1}.
  bool is_unit() const;
  /// Ideal membership.
  bool contains(const TracePolynomial& f) const;

 private:
  friend GroebnerBasis buchberger(const PolynomialIdeal&, const GroebnerOptions&);
  std::vector<TracePolynomial> basis_;
  MonomialOrder order_;
};

GroebnerBasis buchberger(const PolynomialIdeal& ideal, const GroebnerOptions& options = {});

/// Remainder of f under full multivariate division by the basis.
TracePolynomial normal_form(const TracePolynomial& f, const GroebnerBasis& gb);
/// As above, but throws std::invalid_argument unless order matches gb.order().
TracePolynomial normal_form(const TracePolynomial& f, const GroebnerBasis& gb, const MonomialOrder& order);

TracePolynomial s_polynomial(const TracePolynomial& f, const TracePolynomial& g, const MonomialOrder& order);

/// Buchberger criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<TracePolynomial>& polys, const MonomialOrder& order);

/// f in sqrt(I), by the Rabinowitsch trick: I + <1 - u f> is the unit ideal
/// for a fresh auxiliary variable u.
bool radical_member(const TracePolynomial& f, const PolynomialIdeal& ideal, const GroebnerOptions& options = {});

/// sqrt(a) == sqrt(b), checked generator by generator in both directions.
bool radical_equal(const PolynomialIdeal& a, const PolynomialIdeal& b, const GroebnerOptions& options = {});

}  // namespace charvar
