#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbs/point_group.hpp"

namespace sbs {

// Normalizers of the point groups in O(3), as (family, n) -> (family', n').
// Canonical poses are chosen so the normalizer of a canonical group is itself
// canonical; the returned element is therefore always the identity.
struct NormalizerRef {
  PgName name;
  int n = 0;  // 0 when not axial / symbolic
};

NormalizerRef normalizer_name_of(PgName name, int n);

// (n_elem, normalizer) pair; n_elem is the identity by the pose convention.
std::pair<Mat3, PointGroup> normalizer_of(PgName name, int n);

// A presentation: named one-letter generators realized as matrices, plus the
// relator words that must evaluate to the identity.
struct Presentation {
  std::string family;                  // "D(2n)h", "Oh" or "Ih"
  std::vector<char> generator_names;   // e.g. {'a','b','m'}
  std::vector<Mat3> generator_mats;
  std::vector<std::string> relators;   // words like "aabab"
};

// Words are products of generator letters with optional integer exponents,
// e.g. "a2b" = a^2 b, "ba2" = b a^2, "abm" = a b m. "e" is the identity.
Mat3 evaluate_word(const Presentation& p, const std::string& word);

Presentation presentation_of(const std::string& family, int n = 0);

// Realize a tabulated presentation: the closed group plus the generator map.
// Verifies every relator; supported families: "D(2n)h", "Oh", "Ih".
std::pair<MatrixGroup, std::map<char, Mat3>> realize_presentation(const std::string& family,
                                                                  int n = 0);

// One row of the complement tables: how the family sits inside its normalizer
// presentation and the generators of one complement (empty words = trivial
// complement, nullopt = no complement exists).
struct ComplementRow {
  std::string normalizer_family;                  // presentation family, "" if symbolic
  std::vector<std::string> subgroup_words;        // S inside the presentation
  std::optional<std::vector<std::string>> complement_words;
  std::vector<PgName> symbolic_complements;       // for rows with infinite normalizers
};

ComplementRow complement_row_of(PgName name, int n);

// The tabulated complement realized in the canonical normalizer frame, or
// nullopt for "no complement" rows. For rows with an infinite normalizer and
// a symbolic complement the PointGroup is symbolic.
std::optional<std::pair<std::vector<std::string>, PointGroup>> complement_in_normalizer(
    PgName name, int n);

// A canonical symmetry breaking object for the family: trivial stabilizer in
// the canonical group and, where the complement table has an entry, the full
// complement symmetry inside the normalizer (so the generated set is ideal).
IrrepObject canonical_breaking_object(PgName name, int n);

// All table data as a versioned JSON document (serialized by the CLI).
std::string tables_json_dump();

// Families with realizable instances, for iteration in tests and dumps.
std::vector<std::pair<PgName, int>> table_instances(int max_n);

}  // namespace sbs
