#include "charvar/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace charvar {

namespace {

using Exp = std::vector<std::uint32_t>;

struct DTerm {
  Exp exp;
  Rational coef;
};

// Terms in ascending order, so the leading term is back().
using DPoly = std::vector<DTerm>;

// Dense variable layout shared by every polynomial in one computation.
// Index 0 is the most significant variable; auxiliary variables come first.
class Ring {
 public:
  Ring(const MonomialOrder& order, std::vector<TraceVariable> vars) : order_(order), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end(),
              [&](const TraceVariable& a, const TraceVariable& b) { return order_.ranks_above(a, b); });
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      index_.emplace(vars_[i], i);
      if (vars_[i].is_auxiliary()) n_aux_ = i + 1;
    }
  }

  std::size_t size() const { return vars_.size(); }

  int compare(const Exp& a, const Exp& b) const {
    const std::size_t n = vars_.size();
    for (std::size_t i = 0; i < n_aux_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (order_.kind() == OrderKind::lex) {
      for (std::size_t i = n_aux_; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    }
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = n_aux_; i < n; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = n; i-- > n_aux_;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }

  bool less(const Exp& a, const Exp& b) const { return compare(a, b) < 0; }

  DPoly to_dense(const TracePolynomial& p) const {
    DPoly out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      Exp e(vars_.size(), 0);
      for (const auto& [v, k] : m.factors()) e[index_.at(v)] = k;
      out.push_back({std::move(e), c});
    }
    std::sort(out.begin(), out.end(), [&](const DTerm& a, const DTerm& b) { return less(a.exp, b.exp); });
    return out;
  }

  TracePolynomial to_sparse(const DPoly& p) const {
    std::vector<TracePolynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) {
      std::vector<Monomial::Factor> f;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (t.exp[i]) f.emplace_back(vars_[i], t.exp[i]);
      terms.emplace_back(Monomial(std::move(f)), t.coef);
    }
    return TracePolynomial(std::move(terms));
  }

 private:
  MonomialOrder order_;
  std::vector<TraceVariable> vars_;
  std::map<TraceVariable, std::size_t> index_;
  std::size_t n_aux_ = 0;
};

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exp quotient(const Exp& num, const Exp& den) {
  Exp out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) out[i] = num[i] - den[i];
  return out;
}

bool coprime(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

std::uint64_t degree(const Exp& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// p - c * x^m * g
DPoly sub_mul(const Ring& R, const DPoly& p, const Rational& c, const Exp& m, const DPoly& g) {
  DPoly out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  Exp shifted(m.size());
  auto shift = [&](const Exp& e) {
    for (std::size_t k = 0; k < m.size(); ++k) shifted[k] = e[k] + m[k];
  };
  if (j < g.size()) shift(g[j].exp);
  while (i < p.size() || j < g.size()) {
    int cmp = i == p.size() ? 1 : j == g.size() ? -1 : R.compare(p[i].exp, shifted);
    if (cmp < 0) {
      out.push_back(p[i++]);
    } else if (cmp > 0) {
      out.push_back({shifted, -c * g[j].coef});
      if (++j < g.size()) shift(g[j].exp);
    } else {
      Rational v = p[i].coef - c * g[j].coef;
      if (v != 0) out.push_back({p[i].exp, std::move(v)});
      ++i;
      if (++j < g.size()) shift(g[j].exp);
    }
  }
  return out;
}

void make_monic(DPoly& p) {
  if (p.empty() || p.back().coef == 1) return;
  Rational inv = 1 / p.back().coef;
  for (auto& t : p) t.coef *= inv;
}

// Full reduction of p by the polynomials G[k] for which active[k] holds.
DPoly reduce(const Ring& R, DPoly p, const std::vector<DPoly>& G, const std::vector<bool>& active) {
  DPoly rem;
  while (!p.empty()) {
    const DTerm& lt = p.back();
    const DPoly* by = nullptr;
    for (std::size_t k = 0; k < G.size(); ++k)
      if (active[k] && divides(G[k].back().exp, lt.exp)) {
        by = &G[k];
        break;
      }
    if (!by) {
      rem.push_back(std::move(p.back()));
      p.pop_back();
      continue;
    }
    Rational c = lt.coef / by->back().coef;
    p = sub_mul(R, p, c, quotient(lt.exp, by->back().exp), *by);
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

DPoly spoly(const Ring& R, const DPoly& f, const DPoly& g) {
  Exp l = lcm(f.back().exp, g.back().exp);
  Exp mf = quotient(l, f.back().exp);
  Exp mg = quotient(l, g.back().exp);
  // (1/lc f) x^mf f - (1/lc g) x^mg g
  DPoly a = sub_mul(R, DPoly{}, Rational(-1) / f.back().coef, mf, f);
  return sub_mul(R, a, Rational(1) / g.back().coef, mg, g);
}

bool is_constant(const DPoly& p) {
  return p.size() == 1 && std::all_of(p[0].exp.begin(), p[0].exp.end(), [](auto x) { return x == 0; });
}

std::vector<TraceVariable> collect_variables(const std::vector<TracePolynomial>& polys) {
  std::set<TraceVariable> vars;
  for (const auto& p : polys)
    for (const auto& v : p.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

struct Pair {
  std::size_t i, j;
  Exp lcm;
  std::uint64_t deg;
};

// Reduced basis from a Groebner basis: drop redundant leading terms, then
// interreduce and normalize.
std::vector<DPoly> finalize(const Ring& R, std::vector<DPoly> G) {
  std::vector<bool> keep(G.size(), true);
  for (std::size_t a = 0; a < G.size(); ++a)
    for (std::size_t b = 0; b < G.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (divides(G[b].back().exp, G[a].back().exp)) keep[a] = false;
    }
  std::vector<DPoly> min;
  for (std::size_t a = 0; a < G.size(); ++a)
    if (keep[a]) min.push_back(std::move(G[a]));
  std::vector<DPoly> out(min.size());
  for (std::size_t a = 0; a < min.size(); ++a) {
    std::vector<bool> others(min.size(), true);
    others[a] = false;
    DPoly lead{min[a].back()};
    DPoly tail(min[a].begin(), min[a].end() - 1);
    DPoly r = reduce(R, tail, min, others);
    r.push_back(lead.back());
    make_monic(r);
    out[a] = std::move(r);
  }
  std::sort(out.begin(), out.end(),
            [&](const DPoly& x, const DPoly& y) { return R.less(y.back().exp, x.back().exp); });
  return out;
}

std::vector<DPoly> run_buchberger(const Ring& R, std::vector<DPoly> input, const GroebnerOptions& opt) {
  std::vector<DPoly> G;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t processed = 0;

  auto unit = [&] {
    DPoly one{{Exp(R.size(), 0), Rational(1)}};
    return std::vector<DPoly>{one};
  };

  auto add = [&](DPoly h) -> bool {
    make_monic(h);
    if (is_constant(h)) return true;
    const std::size_t n = G.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k]) continue;
      Exp l = lcm(G[k].back().exp, h.back().exp);
      pairs.push_back({k, n, l, degree(l)});
      pending.insert({k, n});
    }
    G.push_back(std::move(h));
    active.push_back(true);
    return false;
  };

  // Seed with interreduced input, most significant first.
  std::sort(input.begin(), input.end(),
            [&](const DPoly& a, const DPoly& b) { return R.less(a.back().exp, b.back().exp); });
  for (auto& f : input) {
    DPoly h = reduce(R, std::move(f), G, active);
    if (h.empty()) continue;
    if (add(std::move(h))) return unit();
  }

  auto worse = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    int c = R.compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) { return worse(b, a); });
    Pair p = std::move(*it);
    *it = std::move(pairs.back());
    pairs.pop_back();
    pending.erase({p.i, p.j});
    if (++processed > opt.max_pairs)
      throw GroebnerLimitExceeded("Groebner pair budget of " + std::to_string(opt.max_pairs) + " exceeded");

    const Exp& li = G[p.i].back().exp;
    const Exp& lj = G[p.j].back().exp;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(G[k].back().exp, p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    DPoly h = reduce(R, spoly(R, G[p.i], G[p.j]), G, active);
    if (h.empty()) continue;
    if (add(std::move(h))) return unit();
  }
  return finalize(R, std::move(G));
}

}  // namespace

PolynomialIdeal::PolynomialIdeal(std::vector<TracePolynomial> generators, MonomialOrder order)
    : generators_(std::move(generators)), order_(std::move(order)) {
  for (const auto& g : generators_)
    if (g.is_zero()) throw std::invalid_argument("ideal generators must be nonzero");
}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_[0] == TracePolynomial(1); }

bool GroebnerBasis::contains(const TracePolynomial& f) const { return normal_form(f, *this).is_zero(); }

GroebnerBasis buchberger(const PolynomialIdeal& ideal, const GroebnerOptions& options) {
  Ring R(ideal.order(), collect_variables(ideal.generators()));
  std::vector<DPoly> input;
  for (const auto& g : ideal.generators()) input.push_back(R.to_dense(g));
  GroebnerBasis gb;
  gb.order_ = ideal.order();
  for (const auto& p : run_buchberger(R, std::move(input), options)) gb.basis_.push_back(R.to_sparse(p));
  return gb;
}

TracePolynomial normal_form(const TracePolynomial& f, const GroebnerBasis& gb) {
  std::vector<TracePolynomial> all = gb.basis();
  all.push_back(f);
  Ring R(gb.order(), collect_variables(all));
  std::vector<DPoly> G;
  for (const auto& g : gb.basis()) G.push_back(R.to_dense(g));
  return R.to_sparse(reduce(R, R.to_dense(f), G, std::vector<bool>(G.size(), true)));
}

TracePolynomial normal_form(const TracePolynomial& f, const GroebnerBasis& gb, const MonomialOrder& order) {
  if (!(order == gb.order())) throw std::invalid_argument("normal_form: monomial order differs from the basis order");
  return normal_form(f, gb);
}

TracePolynomial s_polynomial(const TracePolynomial& f, const TracePolynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of a zero polynomial");
  Ring R(order, collect_variables({f, g}));
  return R.to_sparse(spoly(R, R.to_dense(f), R.to_dense(g)));
}

bool is_groebner_basis(const std::vector<TracePolynomial>& polys, const MonomialOrder& order) {
  Ring R(order, collect_variables(polys));
  std::vector<DPoly> G;
  for (const auto& p : polys) {
    if (p.is_zero()) return false;
    G.push_back(R.to_dense(p));
  }
  std::vector<bool> all(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!reduce(R, spoly(R, G[i], G[j]), G, all).empty()) return false;
  return true;
}

bool radical_member(const TracePolynomial& f, const PolynomialIdeal& ideal, const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  int next_aux = 0;
  for (const auto& g : ideal.generators())
    for (const auto& v : g.variables())
      if (v.is_auxiliary()) next_aux = std::max(next_aux, v.auxiliary_id() + 1);
  for (const auto& v : f.variables())
    if (v.is_auxiliary()) next_aux = std::max(next_aux, v.auxiliary_id() + 1);
  TraceVariable u = TraceVariable::auxiliary(next_aux);
  std::vector<TracePolynomial> gens = ideal.generators();
  gens.push_back(TracePolynomial(1) - TracePolynomial(u) * f);
  return buchberger(PolynomialIdeal(std::move(gens), ideal.order()), options).is_unit();
}

bool radical_equal(const PolynomialIdeal& a, const PolynomialIdeal& b, const GroebnerOptions& options) {
  auto within = [&](const PolynomialIdeal& x, const PolynomialIdeal& y) {
    GroebnerBasis gy = buchberger(y, options);
    for (const auto& g : x.generators())
      if (!gy.contains(g) && !radical_member(g, y, options)) return false;
    return true;
  };
  return within(a, b) && within(b, a);
}

}  // namespace charvar
