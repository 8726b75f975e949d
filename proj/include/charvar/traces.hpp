#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "charvar/polynomial.hpp"
#include "charvar/word.hpp"

namespace charvar {

/// Reduces tr(w) for generic unimodular matrices to a polynomial in the
/// variables t_S, |S| <= 3.
///
/// The word is cyclically reduced and replaced by a canonical representative
/// of its conjugacy class up to inversion (fewest inverse letters, then the
/// lexicographically least rotation), so conjugate and mutually inverse words
/// give identical output. The representative is then rewritten by the first
/// applicable rule:
///   tr(X^-k V)  = tr(X^k) tr(V) - tr(X^k V)
///   tr(U X X V) = tr(X) tr(X V U) - tr(V U)
///   length <= 3 words become variables (odd triples via the 3-letter identity)
///   tr(X Y Z W) expands by the 4-term trace identity
/// Results are memoized by canonical word; the cache is safe to share across
/// threads.
TracePolynomial reduce_trace(const FreeWord& w);
TracePolynomial reduce_trace(const std::vector<int>& letters);

/// Canonical representative used as the memo key.
std::vector<int> canonical_trace_word(const std::vector<int>& letters);

void clear_trace_cache();
std::size_t trace_cache_size();

/// Formal linear combination of words with polynomial coefficients, an
/// element of the algebra generated by generic matrices. The empty word is
/// the identity matrix.
class MatrixExpr {
 public:
  explicit MatrixExpr(int rank = 1) : rank_(rank) {}

  static MatrixExpr identity(int rank, const TracePolynomial& coefficient = TracePolynomial(1));
  static MatrixExpr word(const FreeWord& w, const TracePolynomial& coefficient = TracePolynomial(1));

  int rank() const { return rank_; }
  const std::map<FreeWord, TracePolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TracePolynomial coefficient(const FreeWord& w) const;

  MatrixExpr& add(const FreeWord& w, const TracePolynomial& coefficient);
  MatrixExpr& operator+=(const MatrixExpr& other);
  MatrixExpr& operator-=(const MatrixExpr& other);
  MatrixExpr scaled(const TracePolynomial& factor) const;

  friend MatrixExpr operator+(MatrixExpr a, const MatrixExpr& b) { return a += b; }
  friend MatrixExpr operator-(MatrixExpr a, const MatrixExpr& b) { return a -= b; }
  friend bool operator==(const MatrixExpr&, const MatrixExpr&) = default;

 private:
  int rank_;
  std::map<FreeWord, TracePolynomial> terms_;
};

TracePolynomial trace_of_expr(const MatrixExpr& e);
MatrixExpr expr_mul(const MatrixExpr& a, const MatrixExpr& b);
inline MatrixExpr operator*(const MatrixExpr& a, const MatrixExpr& b) { return expr_mul(a, b); }

/// Z_i = X_i - (1/2) tr(X_i) 1.
MatrixExpr traceless(int i, int rank);

/// Signed sum of a b c over the six orderings of (a, b, c).
MatrixExpr s3(const MatrixExpr& a, const MatrixExpr& b, const MatrixExpr& c);

}  // namespace charvar
