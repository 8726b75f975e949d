#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "charvar/polynomial.hpp"
#include "charvar/relations.hpp"
#include "charvar/word.hpp"

namespace charvar {

using Complex = std::complex<double>;

/// 2x2 complex matrix [[a, b], [c, d]], normally of determinant one.
struct SL2Matrix {
  Complex a{1}, b{0}, c{0}, d{1};

  static SL2Matrix identity() { return {}; }
  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  /// Adjugate, the inverse when det = 1.
  SL2Matrix inverse() const { return {d, -b, -c, a}; }

  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

struct RepresentationPoint {
  std::vector<SL2Matrix> matrices;
  std::uint64_t seed = 0;

  int rank() const { return static_cast<int>(matrices.size()); }
};

/// Entries a, b, c with real and imaginary parts uniform in [-1, 1], |a| >= 0.1,
/// and d = (1 + bc) / a.
SL2Matrix random_sl2(std::mt19937_64& rng);
/// rank independent random_sl2 draws from a generator seeded with seed.
RepresentationPoint random_point(int rank, std::uint64_t seed);

/// Trace of the literal product. Throws std::invalid_argument when the word
/// uses generators beyond the point's rank.
Complex eval_word(const FreeWord& w, const RepresentationPoint& pt);
SL2Matrix eval_product(const FreeWord& w, const RepresentationPoint& pt);

/// t_S -> trace of the product over S, for every |S| <= 3.
Assignment assignment_of(const RepresentationPoint& pt);

struct VanishingFailure {
  std::size_t polynomial;  // index into the checked list
  std::uint64_t seed;      // seed of the failing point
  double magnitude;        // |value|
};

struct VanishingReport {
  std::size_t polynomials = 0;
  int trials = 0;
  double tolerance = 0;
  std::vector<VanishingFailure> failures;

  bool ok() const { return failures.empty(); }
  /// One line per failure: "poly <i> seed <s> |value| <v>".
  std::string to_text() const;
  std::string to_json() const;
};

using PointSampler = std::function<RepresentationPoint(std::uint64_t seed)>;

/// Each polynomial must satisfy |p(x)| <= tol * (1 + max term magnitude) at
/// trial points drawn with seeds seed, seed + 1, ..., seed + trials - 1.
VanishingReport check_vanishing(const std::vector<TracePolynomial>& polys, int rank, int trials, double tol,
                                std::uint64_t seed = 0);
VanishingReport check_vanishing(const std::vector<TracePolynomial>& polys, int trials, double tol,
                                std::uint64_t seed, const PointSampler& sampler);

/// |det| of the Jacobian of the 3r-3 trace functions tr X_i, tr X_1X_i (i>=2),
/// tr X_2X_i (i>=3) with respect to 3r-3 free matrix entries, by central
/// differences. With duplicate_last_row the final function is replaced by a
/// copy of the previous one (a dependent control).
double jacobian_independence(int rank, std::uint64_t seed, bool duplicate_last_row = false);

struct RepresentationOptions {
  int max_restarts = 50;
  int max_iterations = 200;
  double tolerance = 1e-12;
};

/// A numerical point of Hom(Gamma, SL2(C)): Levenberg-Marquardt iteration
/// on det X_k = 1 and R(X) = 1 for every relator, from random starts.
/// Throws std::runtime_error if no start converges.
RepresentationPoint sample_representation(const GroupPresentation& pres, std::uint64_t seed,
                                          const RepresentationOptions& options = {});

}  // namespace charvar
