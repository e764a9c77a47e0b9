#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tagsub/type.hpp"

namespace tagsub {

/// One line of a hierarchy: `child` extends `parent` (if any).
struct Declaration {
  std::string name;
  NameKind kind = NameKind::Concrete;
  std::optional<std::string> parent;

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

/// A validated forest of nominal declarations.
///
/// Invariants established by validate(): names are unique, every name has at
/// most one parent, parents are declared and abstract, and there are no
/// cycles. Concrete names are therefore always leaves. Declaration order is
/// kept; it fixes the order of descendant unions produced by normalization.
class NominalHierarchy {
 public:
  /// Throws Error with CycleDetected, DuplicateName, MultipleParents,
  /// ConcreteParent or UnknownParent.
  static NominalHierarchy validate(std::vector<Declaration> decls);

  /// The numeric tower: Num > {Real > {Int, Flt}, Cmplx}, plus Str.
  static const NominalHierarchy& builtin();

  const std::vector<Declaration>& declarations() const noexcept { return decls_; }
  std::size_t size() const noexcept { return decls_.size(); }

  bool contains(std::string_view text) const;
  /// Throws UnknownName.
  NominalName lookup(std::string_view text) const;
  std::optional<NominalName> find(std::string_view text) const;

  std::vector<NominalName> names() const;
  std::vector<NominalName> concrete_names() const;
  std::vector<NominalName> abstract_names() const;

  /// Reflexive-transitive closure of the extends relation. Throws
  /// UnknownName if either name is undeclared or has the wrong kind.
  bool nominal_subtype(const NominalName& sub, const NominalName& super) const;

  /// Concrete names below `n` (or `n` itself when concrete), in declaration
  /// order.
  std::vector<NominalName> concrete_descendants(const NominalName& n) const;

  /// Abstract names a with nominal_subtype(a, n), including n, in
  /// declaration order. Empty for concrete n.
  std::vector<NominalName> abstract_descendants(const NominalName& n) const;

  /// A new hierarchy with one more declaration appended.
  NominalHierarchy extended(Declaration d) const;

  friend bool operator==(const NominalHierarchy& a, const NominalHierarchy& b) {
    return a.decls_ == b.decls_;
  }

 private:
  NominalHierarchy() = default;
  std::size_t index_of(const NominalName& n) const;

  std::vector<Declaration> decls_;
  std::unordered_map<std::string, std::size_t> index_;
  // reaches_[i * n + j] is true iff decl i reaches decl j by parent edges.
  std::vector<bool> reaches_;
};

/// Parses the line-based hierarchy format:
///
///   # comment
///   abstract Num
///   concrete Int <: Real
///
/// Malformed lines raise SyntaxError carrying the 1-based line number;
/// the result is then validated.
NominalHierarchy parse_hierarchy(std::string_view text);
NominalHierarchy load_hierarchy(const std::string& path);

/// Renders a hierarchy back into the file format.
std::string format_hierarchy(const NominalHierarchy& h);

/// Source text of the built-in hierarchy.
std::string_view builtin_hierarchy_text();

bool is_identifier(std::string_view s);

/// Throws UnknownName unless every name in `t` is declared in `h` with the
/// same kind.
void require_well_formed(const NominalHierarchy& h, const Type& t);

}  // namespace tagsub
