#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagsub/hierarchy.hpp"
#include "tagsub/reductive.hpp"
#include "tagsub/semantics.hpp"
#include "tagsub/type.hpp"

namespace tagsub {

/// Declarative rules. Nom covers every strict nominal edge n1 < n2 of the
/// hierarchy; AbsUnion states a <= (left-nested union of the concrete
/// descendants of a) and is rejected in atomic mode.
enum class DeclRule {
  Refl,
  Trans,
  Nom,
  AbsUnion,
  Pair,
  UnionL,
  UnionR1,
  UnionR2,
  Distr1,
  Distr2,
};

std::string_view rule_name(DeclRule r);

/// A declarative proof tree of lhs <= rhs. Only Trans carries a witness,
/// the intermediate type.
struct Derivation {
  DeclRule rule;
  Type lhs;
  Type rhs;
  std::vector<Derivation> premises;
  std::optional<Type> witness;

  std::size_t size() const;
};

/// True iff every node instantiates its rule schema under mode `m`.
/// Never throws.
bool check_declarative(const NominalHierarchy& h, const Derivation& d, Mode m);

/// Translates a reductive trace into a declarative derivation with the same
/// conclusion. SR-NF becomes Trans through the normal form of the lhs.
/// Throws InvalidTrace if the trace does not check.
Derivation synthesize(const NominalHierarchy& h, const ReductiveTrace& tr, Mode m);

/// A derivation of t <= normalize(t). Throws EmptyAbstract in semantic mode
/// when t has no normal form.
Derivation derive_sub_nf(const NominalHierarchy& h, const Type& t, Mode m);

/// A derivation of normalize(t) <= t.
Derivation derive_nf_sub(const NominalHierarchy& h, const Type& t, Mode m);

/// Same layout as format_trace, with a `witness: <type>` line under each
/// Trans node.
std::string format_derivation(const Derivation& d);

}  // namespace tagsub
