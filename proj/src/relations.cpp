#include "charvar/relations.hpp"

#include <algorithm>
#include <stdexcept>

#include "charvar/traces.hpp"

namespace charvar {

GroupPresentation::GroupPresentation(int rank, std::vector<FreeWord> relators) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("presentation rank must be positive");
  for (auto& r : relators) {
    if (r.rank() > rank) throw std::invalid_argument("relator rank exceeds presentation rank");
    FreeWord reduced = free_reduce(FreeWord(r.letters(), rank));
    if (reduced.empty()) {
      ++dropped_;
      continue;
    }
    relators_.push_back(std::move(reduced));
  }
}

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (int i = 1; i <= rank_; ++i) {
    if (i > 1) out += ',';
    out += rank_ <= 26 ? std::string(1, static_cast<char>('a' + i - 1)) : "x" + std::to_string(i);
  }
  out += " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out += i ? ", " : " ";
    out += rank_ <= 26 ? relators_[i].to_letters() : relators_[i].to_string();
  }
  return out + ">";
}

std::vector<TracePolynomial> CharVarietyPresentation::all_relations() const {
  std::vector<TracePolynomial> out = free_relations;
  out.insert(out.end(), cutout_relations.begin(), cutout_relations.end());
  return out;
}

std::vector<TraceVariable> generators(int rank) {
  if (rank < 1) throw std::invalid_argument("generators: rank must be positive");
  std::vector<TraceVariable> out;
  for (int i = 1; i <= rank; ++i) out.push_back(TraceVariable{i});
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) out.push_back(TraceVariable{i, j});
  for (const auto& t : increasing_triples(rank)) out.push_back(TraceVariable{t[0], t[1], t[2]});
  return out;
}

std::vector<Triple> increasing_triples(int rank) {
  std::vector<Triple> out;
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j)
      for (int k = j + 1; k <= rank; ++k) out.push_back({i, j, k});
  return out;
}

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// tr(s3(Z_i, Z_j, Z_k)) and tr(Z_i Z_j), computed once per rank.
class TracelessTraces {
 public:
  explicit TracelessTraces(int rank) : rank_(rank) {
    for (int i = 1; i <= rank; ++i) z_.push_back(traceless(i, rank));
    pair_.resize(static_cast<std::size_t>(rank * rank));
    for (int i = 1; i <= rank; ++i)
      for (int j = i; j <= rank; ++j) {
        TracePolynomial t = trace_of_expr(Z(i) * Z(j));
        pair_[index(i, j)] = t;
        pair_[index(j, i)] = t;
      }
  }

  const MatrixExpr& Z(int i) const { return z_[static_cast<std::size_t>(i - 1)]; }
  const TracePolynomial& pair(int i, int j) const { return pair_[index(i, j)]; }

  TracePolynomial s3_trace(int i, int j, int k) const {
    return trace_of_expr(s3(Z(i), Z(j), Z(k)));
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * rank_ + (j - 1)); }

  int rank_;
  std::vector<MatrixExpr> z_;
  std::vector<TracePolynomial> pair_;
};

TracePolynomial det3(const std::array<std::array<TracePolynomial, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

TracePolynomial type1_from(const TracelessTraces& tt, const TracePolynomial& s3_i,
                           const TracePolynomial& s3_j, const Triple& I, const Triple& J) {
  std::array<std::array<TracePolynomial, 3>, 3> m;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) m[a][b] = tt.pair(I[a], J[b]);
  return s3_i * s3_j + det3(m).scaled(Rational(18));
}

TracePolynomial type2_from(const TracelessTraces& tt, int i, const std::array<int, 4>& p) {
  TracePolynomial sum;
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<int, 3> rest{};
    std::size_t n = 0;
    for (std::size_t q = 0; q < 4; ++q)
      if (q != k) rest[n++] = p[q];
    TracePolynomial term = tt.pair(i, p[k]) * tt.s3_trace(rest[0], rest[1], rest[2]);
    if (k % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

void check_triple(const Triple& t, int rank) {
  if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= rank))
    throw std::invalid_argument("triple must satisfy 1 <= i1 < i2 < i3 <= rank");
}

}  // namespace

std::size_t generator_count(int rank) {
  return binomial(rank, 1) + binomial(rank, 2) + binomial(rank, 3);
}

std::size_t free_relation_count(int rank) {
  std::size_t c3 = binomial(rank, 3);
  return (c3 * c3 + c3) / 2 + static_cast<std::size_t>(rank) * binomial(rank, 4);
}

TracePolynomial type1_relation(const Triple& I, const Triple& J, int rank) {
  check_triple(I, rank);
  check_triple(J, rank);
  TracelessTraces tt(rank);
  return type1_from(tt, tt.s3_trace(I[0], I[1], I[2]), tt.s3_trace(J[0], J[1], J[2]), I, J);
}

TracePolynomial type2_relation(int i, const std::array<int, 4>& p, int rank) {
  if (i < 1 || i > rank) throw std::invalid_argument("type2_relation: index out of range");
  if (!(1 <= p[0] && p[0] < p[1] && p[1] < p[2] && p[2] < p[3] && p[3] <= rank))
    throw std::invalid_argument("type2_relation: quadruple must be increasing within rank");
  TracelessTraces tt(rank);
  return type2_from(tt, i, p);
}

std::vector<TracePolynomial> type1_relations(int rank) {
  std::vector<TracePolynomial> out;
  if (rank < 3) return out;
  TracelessTraces tt(rank);
  auto triples = increasing_triples(rank);
  std::vector<TracePolynomial> s3_traces;
  s3_traces.reserve(triples.size());
  for (const auto& t : triples) s3_traces.push_back(tt.s3_trace(t[0], t[1], t[2]));
  for (std::size_t a = 0; a < triples.size(); ++a)
    for (std::size_t b = a; b < triples.size(); ++b)
      out.push_back(primitive_part(type1_from(tt, s3_traces[a], s3_traces[b], triples[a], triples[b])));
  return out;
}

std::vector<TracePolynomial> type2_relations(int rank) {
  std::vector<TracePolynomial> out;
  if (rank < 4) return out;
  TracelessTraces tt(rank);
  std::vector<std::array<int, 4>> quads;
  for (int a = 1; a <= rank; ++a)
    for (int b = a + 1; b <= rank; ++b)
      for (int c = b + 1; c <= rank; ++c)
        for (int d = c + 1; d <= rank; ++d) quads.push_back({a, b, c, d});
  for (int i = 1; i <= rank; ++i)
    for (const auto& p : quads) out.push_back(primitive_part(type2_from(tt, i, p)));
  return out;
}

std::vector<TracePolynomial> free_relations(int rank) {
  auto out = type1_relations(rank);
  auto t2 = type2_relations(rank);
  out.insert(out.end(), std::make_move_iterator(t2.begin()), std::make_move_iterator(t2.end()));
  return out;
}

CutoutResult cutout_relations(const GroupPresentation& pres) {
  CutoutResult result;
  const int r = pres.rank();
  for (std::size_t i = 0; i < pres.relators().size(); ++i) {
    const FreeWord& R = pres.relators()[i];
    for (int j = 0; j <= r; ++j) {
      FreeWord gamma = j == 0 ? FreeWord::identity(r) : FreeWord::generator(j, r);
      TracePolynomial rel = reduce_trace(concat(R, gamma)) - reduce_trace(gamma);
      if (rel.is_zero())
        result.vanished.push_back({i, j});
      else
        result.relations.push_back(primitive_part(rel));
    }
  }
  return result;
}

CharVarietyPresentation full_presentation(const GroupPresentation& pres) {
  CharVarietyPresentation out;
  out.rank = pres.rank();
  out.generators = generators(pres.rank());
  out.free_relations = free_relations(pres.rank());
  auto cut = cutout_relations(pres);
  out.cutout_relations = std::move(cut.relations);
  out.vanished_cutouts = std::move(cut.vanished);
  return out;
}

namespace {

unsigned degree_mask(const TraceVariable& v) {
  unsigned mask = 0;
  for (int i : v.indices()) mask ^= 1U << static_cast<unsigned>(i - 1);
  return mask;
}

// True when some proper, nonempty sub-multiset has vanishing mod-2 degree.
bool decomposes(const std::vector<unsigned>& masks, const std::vector<int>& counts) {
  std::vector<int> take(counts.size(), 0);
  for (;;) {
    std::size_t k = 0;
    while (k < take.size() && take[k] == counts[k]) take[k++] = 0;
    if (k == take.size()) return false;
    ++take[k];
    bool full = true;
    int total = 0;
    unsigned deg = 0;
    for (std::size_t q = 0; q < take.size(); ++q) {
      if (take[q] != counts[q]) full = false;
      total += take[q];
      if (take[q] & 1) deg ^= masks[q];
    }
    if (!full && total > 0 && deg == 0) return true;
  }
}

}  // namespace

std::vector<Monomial> psl2_generators(int rank, int max_factors) {
  if (max_factors < 1) throw std::invalid_argument("psl2_generators: max_factors must be >= 1");
  if (rank > 31) throw std::invalid_argument("psl2_generators: rank too large");
  const auto gens = generators(rank);
  std::vector<unsigned> masks;
  for (const auto& g : gens) masks.push_back(degree_mask(g));

  std::vector<Monomial> out;
  std::vector<std::size_t> chosen;  // non-decreasing generator indices
  auto visit = [&](auto&& self, std::size_t from, unsigned deg) -> void {
    if (!chosen.empty() && deg == 0) {
      std::vector<unsigned> sub_masks;
      std::vector<int> counts;
      std::vector<Monomial::Factor> factors;
      for (std::size_t k = 0; k < chosen.size();) {
        std::size_t e = k;
        while (e < chosen.size() && chosen[e] == chosen[k]) ++e;
        sub_masks.push_back(masks[chosen[k]]);
        counts.push_back(static_cast<int>(e - k));
        factors.emplace_back(gens[chosen[k]], static_cast<std::uint32_t>(e - k));
        k = e;
      }
      if (!decomposes(sub_masks, counts)) out.emplace_back(std::move(factors));
    }
    if (chosen.size() == static_cast<std::size_t>(max_factors)) return;
    for (std::size_t g = from; g < gens.size(); ++g) {
      chosen.push_back(g);
      self(self, g, deg ^ masks[g]);
      chosen.pop_back();
    }
  };
  visit(visit, 0, 0);

  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  return out;
}

}  // namespace charvar
