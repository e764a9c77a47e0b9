#include "tagsub/type.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace tagsub {

struct Type::Node {
  Kind kind;
  NominalName nominal;
  std::optional<Type> left;
  std::optional<Type> right;
  std::size_t depth;
  std::size_t size;
};

Type Type::name(NominalName n) {
  return Type(std::make_shared<const Node>(
      Node{Kind::Name, std::move(n), std::nullopt, std::nullopt, 1, 1}));
}

Type Type::concrete(std::string text) {
  return name(NominalName{std::move(text), NameKind::Concrete});
}

Type Type::abstract(std::string text) {
  return name(NominalName{std::move(text), NameKind::Abstract});
}

Type Type::pair(Type left, Type right) {
  const std::size_t d = 1 + std::max(left.depth(), right.depth());
  const std::size_t s = 1 + left.size() + right.size();
  return Type(std::make_shared<const Node>(
      Node{Kind::Pair, {}, std::move(left), std::move(right), d, s}));
}

Type Type::union_of(Type left, Type right) {
  const std::size_t d = 1 + std::max(left.depth(), right.depth());
  const std::size_t s = 1 + left.size() + right.size();
  return Type(std::make_shared<const Node>(
      Node{Kind::Union, {}, std::move(left), std::move(right), d, s}));
}

Type::Kind Type::kind() const noexcept { return node_->kind; }

const NominalName& Type::nominal() const {
  assert(is_name());
  return node_->nominal;
}

const Type& Type::left() const {
  assert(!is_name());
  return *node_->left;
}

const Type& Type::right() const {
  assert(!is_name());
  return *node_->right;
}

std::size_t Type::depth() const noexcept { return node_->depth; }
std::size_t Type::size() const noexcept { return node_->size; }

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.is_name()) return a.nominal() == b.nominal();
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_name()) return a.nominal() <=> b.nominal();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

bool is_value_type(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Name: return t.nominal().is_concrete();
    case Type::Kind::Pair: return is_value_type(t.left()) && is_value_type(t.right());
    case Type::Kind::Union: return false;
  }
  return false;
}

}  // namespace tagsub
