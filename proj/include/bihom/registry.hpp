#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bihom/identity.hpp"

namespace bihom {

struct Predicate {
  enum class Kind { commute, multiplicative, regular };
  Kind kind = Kind::commute;
  std::string first;   // map
  std::string second;  // map (commute) or operation (multiplicative)

  std::string id() const;
  static Predicate parse(const std::string& text);
  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct IdentityDef {
  std::string id;
  std::string text;
  IdentityAst ast;
  bool regular_only = false;  // meaningful only for invertible structure maps
};

// Identity family with exponent placeholders ^{m+2} etc.
struct TemplateDef {
  std::string id;
  std::string text;
};

struct StructureDef {
  std::string name;
  std::vector<std::string> ops;
  std::vector<std::string> maps;
  std::vector<Predicate> predicates;
  std::vector<IdentityDef> identities;
  std::vector<TemplateDef> templates;
  std::vector<std::string> notes;

  const IdentityDef* find(const std::string& identity_id) const;
};

class Registry {
 public:
  // Parses .idl sources (name -> text) and resolves includes.
  static Registry from_sources(const std::map<std::string, std::string>& sources);
  // The registry compiled into the library.
  static const Registry& builtin();

  bool has(const std::string& name) const { return defs_.count(name) > 0; }
  // "tbp-nlie:<n>" is generated on demand.
  StructureDef get(const std::string& name) const;
  std::vector<std::string> names() const;
  // Looks up an identity by id across every structure.
  const IdentityDef& identity(const std::string& id) const;

 private:
  std::map<std::string, StructureDef> defs_;
};

// One .idl file. Lines:
//   structure NAME | include NAME | ops a, b | maps a, b | predicate P
//   identity ID [(regular)]: forall ... = 0 | template ID: forall ... = 0 | note TEXT
// Bare "forall ..." lines become identities named "line N". Lines starting
// with whitespace continue the previous statement; '#' starts a comment.
std::vector<StructureDef> parse_idl(const std::string& text);

// Transposed BiHom-Poisson n-Lie structure for an n-ary bracket "nbr".
StructureDef tbp_nlie(int n);

// Shift-exponent family of identities valid in regular transposed structures.
enum class ShiftIdentity { bracket_products, product_brackets, fixed };
IdentityAst instantiate_shift(ShiftIdentity which, const ExponentTuple& e);
const char* shift_identity_id(ShiftIdentity which);
// The tuple for which the product-brackets family reduces to the fixed instance.
ExponentTuple shift_fixed_tuple();
// Zero tuple, the fixed tuple, then `extra` seeded tuples with entries in [-2, 2].
std::vector<ExponentTuple> default_exponent_grid(std::uint64_t seed, std::size_t extra = 8);

}  // namespace bihom
