#pragma once

#include "tagsub/hierarchy.hpp"
#include "tagsub/semantics.hpp"
#include "tagsub/type.hpp"

namespace tagsub {

/// Disjunctive normal form. Abstract names become the left-nested union of
/// their concrete descendants in declaration order; pairs distribute over
/// unions via un_prs. No flattening or deduplication is performed.
///
/// Throws EmptyAbstract for an abstract name without concrete descendants.
Type nf(const NominalHierarchy& h, const Type& t);

/// Distributes a pair of normal forms over their unions. The left-union
/// clause takes precedence over the right-union clause.
Type un_prs(const Type& t1, const Type& t2);

/// A value type, or a union of types in normal form.
bool in_nf(const Type& t);

/// Atomic normal form: like nf, but abstract names are kept as atoms.
Type nf_atomic(const NominalHierarchy& h, const Type& t);

/// A nominal name of either kind.
bool is_atom(const Type& t);

/// An atom, a pair of non-union atomic-normal types, or a union of
/// atomic-normal types.
bool in_nf_atomic(const Type& t);

/// nf for Semantic, nf_atomic for Atomic.
Type normalize(const NominalHierarchy& h, const Type& t, Mode m);
bool in_normal_form(const Type& t, Mode m);

/// Left-nested union of the given names. Precondition: non-empty.
Type left_nested_union(const std::vector<NominalName>& names);

}  // namespace tagsub
