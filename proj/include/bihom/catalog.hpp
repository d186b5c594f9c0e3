#pragma once

#include <string>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/structures.hpp"

namespace bihom {

// The 26 shipped two-dimensional examples, ordered by entry number. Each
// bundle carries its CatalogInfo; the stored "br" already includes the
// completion.
const std::vector<AlgebraBundle>& catalog_entries();
const AlgebraBundle& catalog_entry(int n);  // UnknownEntry outside 1..26

// The bracket as listed, i.e. without the completed slots.
MultiOp given_bracket(const AlgebraBundle& entry);
// Same entry with every completed bracket constant forced to zero.
AlgebraBundle zero_completed(const AlgebraBundle& entry);

// Solves br(b e_i, a e_j) + br(b e_j, a e_i) = 0 (i <= j) for the constants of
// the unlisted slots; free unknowns become zero. Needs parameter-free input
// (specialize first). Throws Inconsistent naming the first contradictory row.
MultiOp complete_by_skew(const MultiOp& given, const std::vector<MultiOp::Index>& slots, const LinMap& a,
                         const LinMap& b);

// Verdict ids of the default per-entry check, in column order.
const std::vector<std::string>& catalog_columns();
StructureDef catalog_structure();

Report verify_entry(int n, const CheckMode& mode = {});

struct CatalogSummary {
  std::vector<int> entries;
  std::vector<Report> reports;
  CheckMode mode;

  // True when every asserted-pass entry passed.
  bool asserted_ok() const;
  std::string table() const;
  std::string json() const;
};

// Entries verified in parallel; reports kept in entry order.
CatalogSummary verify_all(const std::vector<int>& entries, const CheckMode& mode = {});

// "26", "24-26", "1,3,20-22"; empty text means all entries.
std::vector<int> parse_entry_range(const std::string& text);

}  // namespace bihom
