#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "charvar/relations.hpp"

namespace charvar {

struct PresentationSource {
  enum class Kind { inline_text, snappy_text };
  Kind kind = Kind::inline_text;
  std::string payload;
};

/// "<a,b | abab, aBAb>". Generators are distinct lowercase letters, numbered
/// in the order listed; an uppercase letter is the inverse. The relator list
/// may be empty.
GroupPresentation parse_presentation(std::string_view text);

/// SnapPy's printed fundamental group:
///
///   Generators:
///      a,b
///   Relators:
///      aabbaaBaB
///      aabbAbAbb
///
/// Several blocks may follow each other; one presentation per block.
std::vector<GroupPresentation> parse_snappy(std::string_view text);

/// Either of the two forms above, picked by the presence of "Generators:".
GroupPresentation parse_source(const PresentationSource& source);
PresentationSource classify_source(std::string text);

enum class ExportFormat { text, json, algebra_system };

ExportFormat parse_format(std::string_view name);

/// Relators are optional and only recorded in the json form, so that a
/// later check can sample representations of the same group.
std::string export_ideal(const CharVarietyPresentation& pres, ExportFormat format,
                         const std::vector<FreeWord>& relators = {});

struct ImportedIdeal {
  CharVarietyPresentation presentation;
  std::vector<FreeWord> relators;
};

/// Inverse of the json export. Also accepts {"relations": ["t{1} - 2", ...]}
/// for hand-written ideals. Throws ParseError on malformed input.
ImportedIdeal import_ideal_json(std::string_view text);

}  // namespace charvar
