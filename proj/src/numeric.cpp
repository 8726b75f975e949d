#include "charvar/numeric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace charvar {

namespace {

Complex uniform_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double re = u(rng);
  return {re, u(rng)};
}

double vanishing_scale(const TracePolynomial& p, const Assignment& a) { return 1.0 + max_term_magnitude(p, a); }

}  // namespace

SL2Matrix random_sl2(std::mt19937_64& rng) {
  Complex a;
  do {
    a = uniform_complex(rng);
  } while (std::abs(a) < 0.1);
  Complex b = uniform_complex(rng);
  Complex c = uniform_complex(rng);
  return {a, b, c, (1.0 + b * c) / a};
}

RepresentationPoint random_point(int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RepresentationPoint pt;
  pt.seed = seed;
  for (int i = 0; i < rank; ++i) pt.matrices.push_back(random_sl2(rng));
  return pt;
}

SL2Matrix eval_product(const FreeWord& w, const RepresentationPoint& pt) {
  SL2Matrix m;
  for (int x : w.letters()) {
    int i = std::abs(x);
    if (i > pt.rank()) throw std::invalid_argument("eval_word: word uses a generator beyond the point's rank");
    const SL2Matrix& g = pt.matrices[static_cast<std::size_t>(i - 1)];
    m = m * (x > 0 ? g : g.inverse());
  }
  return m;
}

Complex eval_word(const FreeWord& w, const RepresentationPoint& pt) { return eval_product(w, pt).trace(); }

Assignment assignment_of(const RepresentationPoint& pt) {
  Assignment out;
  const int r = pt.rank();
  auto tr = [&](std::vector<int> s) { return eval_word(FreeWord(std::move(s), r), pt); };
  for (const auto& v : generators(std::max(r, 1))) {
    if (v.max_index() > r) continue;
    auto idx = v.indices();
    out[v] = tr(std::vector<int>(idx.begin(), idx.end()));
  }
  return out;
}

std::string VanishingReport::to_text() const {
  std::ostringstream os;
  for (const auto& f : failures)
    os << "poly " << f.polynomial << " seed " << f.seed << " |value| " << f.magnitude << "\n";
  return os.str();
}

std::string VanishingReport::to_json() const {
  nlohmann::json j;
  j["polynomials"] = polynomials;
  j["trials"] = trials;
  j["tolerance"] = tolerance;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"polynomial", f.polynomial}, {"seed", f.seed}, {"magnitude", f.magnitude}});
  return j.dump(2);
}

VanishingReport check_vanishing(const std::vector<TracePolynomial>& polys, int trials, double tol,
                                std::uint64_t seed, const PointSampler& sampler) {
  if (trials < 1) throw std::invalid_argument("check_vanishing: trials must be >= 1");
  VanishingReport report;
  report.polynomials = polys.size();
  report.trials = trials;
  report.tolerance = tol;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    Assignment a = assignment_of(sampler(s));
    for (std::size_t i = 0; i < polys.size(); ++i) {
      double v = std::abs(evaluate(polys[i], a));
      if (!(v <= tol * vanishing_scale(polys[i], a))) report.failures.push_back({i, s, v});
    }
  }
  return report;
}

VanishingReport check_vanishing(const std::vector<TracePolynomial>& polys, int rank, int trials, double tol,
                                std::uint64_t seed) {
  return check_vanishing(polys, trials, tol, seed, [rank](std::uint64_t s) { return random_point(rank, s); });
}

// ---------------------------------------------------------------------------
// Jacobian

namespace {

// Parameter layout: p[0] = x1_11; p[1], p[2] = x2_11, x2_22; then for k >= 3
// three entries x_11, x_12, x_22.
std::vector<SL2Matrix> parametrized(const std::vector<Complex>& p, int r) {
  std::vector<SL2Matrix> m;
  m.push_back({p[0], 0.0, 0.0, 1.0 / p[0]});
  if (r >= 2) m.push_back({p[1], p[1] * p[2] - 1.0, 1.0, p[2]});
  for (int k = 3; k <= r; ++k) {
    std::size_t o = 3 + 3 * static_cast<std::size_t>(k - 3);
    Complex a = p[o], b = p[o + 1], d = p[o + 2];
    m.push_back({a, b, (a * d - 1.0) / b, d});
  }
  return m;
}

std::vector<Complex> trace_functions(const std::vector<SL2Matrix>& m, bool duplicate_last) {
  const std::size_t r = m.size();
  std::vector<Complex> f;
  for (std::size_t i = 0; i < r; ++i) f.push_back(m[i].trace());
  for (std::size_t i = 1; i < r; ++i) f.push_back((m[0] * m[i]).trace());
  for (std::size_t i = 2; i < r; ++i) f.push_back((m[1] * m[i]).trace());
  if (duplicate_last && f.size() >= 2) f.back() = f[f.size() - 2];
  return f;
}

bool usable(const std::vector<Complex>& p, int r) {
  if (std::abs(p[0]) < 0.1) return false;
  for (int k = 3; k <= r; ++k)
    if (std::abs(p[3 + 3 * static_cast<std::size_t>(k - 3) + 1]) < 0.1) return false;
  return true;
}

}  // namespace

double jacobian_independence(int rank, std::uint64_t seed, bool duplicate_last_row) {
  if (rank < 2) throw std::invalid_argument("jacobian_independence: rank must be >= 2");
  const std::size_t n = 3 * static_cast<std::size_t>(rank) - 3;
  std::mt19937_64 rng(seed);
  std::vector<Complex> p(n);
  bool ok = false;
  for (int attempt = 0; attempt < 10 && !ok; ++attempt) {
    for (auto& x : p) x = uniform_complex(rng);
    ok = usable(p, rank);
  }
  if (!ok) throw std::runtime_error("jacobian_independence: no usable parameter point after 10 samples");

  const double h = 1e-6;
  Eigen::MatrixXcd J(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto plus = p, minus = p;
    plus[j] += h;
    minus[j] -= h;
    auto fp = trace_functions(parametrized(plus, rank), duplicate_last_row);
    auto fm = trace_functions(parametrized(minus, rank), duplicate_last_row);
    for (std::size_t i = 0; i < n; ++i)
      J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (fp[i] - fm[i]) / (2 * h);
  }
  return std::abs(J.fullPivLu().determinant());
}

// ---------------------------------------------------------------------------
// Representation sampling

namespace {

std::vector<SL2Matrix> unpack(const Eigen::VectorXcd& x, int r) {
  std::vector<SL2Matrix> m(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) m[static_cast<std::size_t>(k)] = {x(4 * k), x(4 * k + 1), x(4 * k + 2), x(4 * k + 3)};
  return m;
}

Eigen::VectorXcd residual(const Eigen::VectorXcd& x, const GroupPresentation& pres) {
  const int r = pres.rank();
  RepresentationPoint pt{unpack(x, r), 0};
  Eigen::VectorXcd f(r + 4 * static_cast<Eigen::Index>(pres.relators().size()));
  for (int k = 0; k < r; ++k) f(k) = pt.matrices[static_cast<std::size_t>(k)].det() - 1.0;
  Eigen::Index o = r;
  for (const auto& R : pres.relators()) {
    SL2Matrix m = eval_product(R, pt);
    f(o++) = m.a - 1.0;
    f(o++) = m.b;
    f(o++) = m.c;
    f(o++) = m.d - 1.0;
  }
  return f;
}

}  // namespace

RepresentationPoint sample_representation(const GroupPresentation& pres, std::uint64_t seed,
                                          const RepresentationOptions& options) {
  const int r = pres.rank();
  const Eigen::Index n = 4 * r;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < options.max_restarts; ++attempt) {
    Eigen::VectorXcd x(n);
    for (int k = 0; k < r; ++k) {
      SL2Matrix m = random_sl2(rng);
      x.segment(4 * k, 4) << m.a, m.b, m.c, m.d;
    }
    Eigen::VectorXcd f = residual(x, pres);
    double norm = f.norm();
    double lambda = 1e-3;
    for (int it = 0; it < options.max_iterations && norm > options.tolerance; ++it) {
      const double h = 1e-7;
      Eigen::MatrixXcd J(f.size(), n);
      for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::VectorXcd xp = x, xm = x;
        xp(j) += h;
        xm(j) -= h;
        J.col(j) = (residual(xp, pres) - residual(xm, pres)) / (2 * h);
      }
      // Levenberg-Marquardt: the relator equations are dependent, so J is rank deficient
      Eigen::MatrixXcd A = J.adjoint() * J;
      Eigen::VectorXcd g = J.adjoint() * f;
      bool improved = false;
      for (int k = 0; k < 30; ++k) {
        Eigen::MatrixXcd D = A;
        D.diagonal().array() += lambda;
        Eigen::VectorXcd trial = x - D.ldlt().solve(g);
        Eigen::VectorXcd ft = residual(trial, pres);
        if (std::isfinite(ft.norm()) && ft.norm() < norm) {
          x = trial;
          f = ft;
          norm = ft.norm();
          lambda = std::max(lambda / 10, 1e-15);
          improved = true;
          break;
        }
        lambda *= 10;
      }
      if (!improved || x.norm() > 1e6) break;
    }
    if (norm <= options.tolerance) return {unpack(x, r), seed};
  }
  throw std::runtime_error("sample_representation: Newton iteration did not converge");
}

}  // namespace charvar
