#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>

namespace tagsub {

enum class NameKind { Concrete, Abstract };

/// A declared nominal type. Two names are equal when both the identifier
/// and the kind agree.
struct NominalName {
  std::string text;
  NameKind kind = NameKind::Concrete;

  bool is_concrete() const noexcept { return kind == NameKind::Concrete; }
  bool is_abstract() const noexcept { return kind == NameKind::Abstract; }

  friend bool operator==(const NominalName&, const NominalName&) = default;
  friend std::strong_ordering operator<=>(const NominalName&,
                                          const NominalName&) = default;
};

/// Immutable type expression: a nominal name, a covariant pair, or an
/// untagged union. Copies share structure.
class Type {
 public:
  enum class Kind { Name, Pair, Union };

  static Type name(NominalName n);
  static Type concrete(std::string text);
  static Type abstract(std::string text);
  static Type pair(Type left, Type right);
  static Type union_of(Type left, Type right);

  Kind kind() const noexcept;
  bool is_name() const noexcept { return kind() == Kind::Name; }
  bool is_pair() const noexcept { return kind() == Kind::Pair; }
  bool is_union() const noexcept { return kind() == Kind::Union; }

  /// Precondition: is_name().
  const NominalName& nominal() const;
  /// Precondition: is_pair() or is_union().
  const Type& left() const;
  const Type& right() const;

  /// Height of the syntax tree; a name has depth 1.
  std::size_t depth() const noexcept;
  /// Number of syntax nodes.
  std::size_t size() const noexcept;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A value type is a concrete name or a pair of value types.
bool is_value_type(const Type& t);

}  // namespace tagsub
