#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagsub/hierarchy.hpp"
#include "tagsub/semantics.hpp"
#include "tagsub/type.hpp"

namespace tagsub {

enum class ReductiveRule { BaseRefl, Nom, Pair, UnionL, UnionR1, UnionR2, NF };

/// "SR-BaseRefl", "SR-Nom", ...
std::string_view rule_name(ReductiveRule r);
std::optional<ReductiveRule> parse_reductive_rule(std::string_view name);

/// A reductive derivation of lhs <: rhs.
struct ReductiveTrace {
  ReductiveRule rule;
  Type lhs;
  Type rhs;
  std::vector<ReductiveTrace> premises;

  /// Number of rule applications in the tree.
  std::size_t size() const;
};

/// NormalizeFirst applies SR-NF once at the root and then runs the
/// syntax-directed rules. ShortPathFirst runs the syntax-directed rules on the
/// original types, normalizing a subterm locally only where they fail, and
/// falls back to NormalizeFirst if that search fails.
enum class Strategy { NormalizeFirst, ShortPathFirst };

std::string to_string(Strategy s);

struct ReductiveResult {
  bool holds = false;
  std::optional<ReductiveTrace> trace;  // set iff holds
};

/// Decides t1 <: t2. Throws UnknownName for undeclared names and, in
/// Semantic mode, EmptyAbstract when t1 cannot be normalized.
ReductiveResult reductive_sub(const NominalHierarchy& h, const Type& t1,
                              const Type& t2, Mode m,
                              Strategy s = Strategy::NormalizeFirst);

/// Same verdict as reductive_sub without building a trace.
bool is_subtype(const NominalHierarchy& h, const Type& t1, const Type& t2,
                Mode m, Strategy s = Strategy::NormalizeFirst);

/// Mutual subtyping.
bool equivalent(const NominalHierarchy& h, const Type& t1, const Type& t2,
                Mode m);

/// True iff every node is a correct instance of its rule under mode `m`.
/// Never throws; malformed trees are rejected.
bool check_reductive_trace(const NominalHierarchy& h, const ReductiveTrace& tr,
                           Mode m);

/// One rule per line, `RULE: lhs <: rhs`, premises indented two spaces.
std::string format_trace(const ReductiveTrace& tr);

}  // namespace tagsub
