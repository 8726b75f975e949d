#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "charvar/polynomial.hpp"
#include "charvar/word.hpp"

namespace charvar {

/// <gamma_1..gamma_r | R_1..R_s>. Relators are freely reduced on
/// construction; relators that reduce to the identity are dropped and counted.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(int rank, std::vector<FreeWord> relators);

  int rank() const { return rank_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  std::size_t dropped_relators() const { return dropped_; }

  std::string to_string() const;

 private:
  int rank_ = 1;
  std::vector<FreeWord> relators_;
  std::size_t dropped_ = 0;
};

/// A cut-out relation that reduced to zero and was omitted.
struct VanishedCutout {
  std::size_t relator;  // index into GroupPresentation::relators()
  int gamma;            // 0 for the identity, otherwise the generator index
};

struct CharVarietyPresentation {
  int rank = 1;
  std::vector<TraceVariable> generators;
  std::vector<TracePolynomial> free_relations;
  std::vector<TracePolynomial> cutout_relations;
  std::vector<VanishedCutout> vanished_cutouts;

  /// free relations followed by cut-out relations
  std::vector<TracePolynomial> all_relations() const;
};

using Triple = std::array<int, 3>;

/// G(r): every t_S with |S| <= 3, singletons then pairs then triples, each
/// block in lexicographic order.
std::vector<TraceVariable> generators(int rank);

std::vector<Triple> increasing_triples(int rank);

/// The determinantal relation for the triple pair (I, J), before
/// normalization. Symmetric in I and J.
TracePolynomial type1_relation(const Triple& I, const Triple& J, int rank);
/// The relation for generator i and quadruple p, before normalization.
TracePolynomial type2_relation(int i, const std::array<int, 4>& p, int rank);

/// One relation per unordered pair of increasing triples (I <= J), each passed
/// through primitive_part. Empty for r < 3.
std::vector<TracePolynomial> type1_relations(int rank);
/// One relation per (i, p0<p1<p2<p3), i outermost. Empty for r < 4.
std::vector<TracePolynomial> type2_relations(int rank);
/// type1 followed by type2.
std::vector<TracePolynomial> free_relations(int rank);

/// C(r,1) + C(r,2) + C(r,3).
std::size_t generator_count(int rank);
/// (C(r,3)^2 + C(r,3)) / 2 + r C(r,4).
std::size_t free_relation_count(int rank);

struct CutoutResult {
  std::vector<TracePolynomial> relations;
  std::vector<VanishedCutout> vanished;
};

/// tr(R gamma_j) - tr(gamma_j) for every relator R and j = 0..r with
/// gamma_0 = 1, normalized by primitive_part. Zero relations are reported in
/// `vanished` instead of being emitted.
CutoutResult cutout_relations(const GroupPresentation& pres);

CharVarietyPresentation full_presentation(const GroupPresentation& pres);

/// Products of generators t_S whose summed mod-2 degree vectors vanish, with at
/// most max_factors factors. Only products with no proper sub-product of
/// vanishing degree are returned, so none is a product of two others. This
/// is a truncation: the full generating set is not bounded here.
std::vector<Monomial> psl2_generators(int rank, int max_factors = 3);

}  // namespace charvar
