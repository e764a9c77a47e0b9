#include "tagsub/semantics.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

#include "tagsub/error.hpp"

namespace tagsub {

std::string to_string(Mode m) { return m == Mode::Semantic ? "semantic" : "atomic"; }

struct Tag::Node {
  Kind kind;
  std::string name;
  std::optional<Tag> left;
  std::optional<Tag> right;
  bool sentinel_inside;
};

Tag Tag::concrete(std::string name) {
  return Tag(std::make_shared<const Node>(
      Node{Kind::Concrete, std::move(name), std::nullopt, std::nullopt, false}));
}

Tag Tag::sentinel(std::string owner) {
  return Tag(std::make_shared<const Node>(
      Node{Kind::Sentinel, std::move(owner), std::nullopt, std::nullopt, true}));
}

Tag Tag::pair(Tag left, Tag right) {
  const bool s = left.has_sentinel() || right.has_sentinel();
  return Tag(std::make_shared<const Node>(
      Node{Kind::Pair, {}, std::move(left), std::move(right), s}));
}

Tag Tag::of_value_type(const Type& v) {
  if (v.is_name() && v.nominal().is_concrete()) return concrete(v.nominal().text);
  if (v.is_pair()) return pair(of_value_type(v.left()), of_value_type(v.right()));
  throw Error(ErrorCode::NotAValueType, "not a value type");
}

Tag::Kind Tag::kind() const noexcept { return node_->kind; }

const std::string& Tag::name() const {
  assert(kind() != Kind::Pair);
  return node_->name;
}

const Tag& Tag::left() const {
  assert(kind() == Kind::Pair);
  return *node_->left;
}

const Tag& Tag::right() const {
  assert(kind() == Kind::Pair);
  return *node_->right;
}

bool Tag::has_sentinel() const noexcept { return node_->sentinel_inside; }

bool operator==(const Tag& a, const Tag& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Tag& a, const Tag& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.kind() != Tag::Kind::Pair) return a.name() <=> b.name();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

TagSet interp(const NominalHierarchy& h, const Type& t, Mode m) {
  switch (t.kind()) {
    case Type::Kind::Name: {
      TagSet out;
      for (const auto& c : h.concrete_descendants(t.nominal())) out.insert(Tag::concrete(c.text));
      if (m == Mode::Atomic) {
        for (const auto& a : h.abstract_descendants(t.nominal())) out.insert(Tag::sentinel(a.text));
      }
      return out;
    }
    case Type::Kind::Pair: {
      const TagSet l = interp(h, t.left(), m);
      const TagSet r = interp(h, t.right(), m);
      TagSet out;
      for (const auto& a : l)
        for (const auto& b : r) out.insert(out.end(), Tag::pair(a, b));
      return out;
    }
    case Type::Kind::Union: {
      TagSet out = interp(h, t.left(), m);
      TagSet r = interp(h, t.right(), m);
      out.merge(r);
      return out;
    }
  }
  return {};
}

bool matches(const NominalHierarchy& h, const Type& v, const Type& t) {
  if (!is_value_type(v)) throw Error(ErrorCode::NotAValueType, "matching needs a value type");
  switch (t.kind()) {
    case Type::Kind::Name:
      return v.is_name() && h.nominal_subtype(v.nominal(), t.nominal());
    case Type::Kind::Pair:
      return v.is_pair() && matches(h, v.left(), t.left()) &&
             matches(h, v.right(), t.right());
    case Type::Kind::Union:
      return matches(h, v, t.left()) || matches(h, v, t.right());
  }
  return false;
}

bool semantic_sub(const NominalHierarchy& h, const Type& t1, const Type& t2, Mode m) {
  const TagSet a = interp(h, t1, m);
  const TagSet b = interp(h, t2, m);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

Type type_of_tag(const Tag& tag) {
  if (tag.kind() == Tag::Kind::Concrete) return Type::concrete(tag.name());
  return Type::pair(type_of_tag(tag.left()), type_of_tag(tag.right()));
}

void print_tag(const Tag& tag, std::string& out) {
  switch (tag.kind()) {
    case Tag::Kind::Concrete:
      out += tag.name();
      return;
    case Tag::Kind::Sentinel:
      out += "E(" + tag.name() + ")";
      return;
    case Tag::Kind::Pair:
      print_tag(tag.left(), out);
      out += '*';
      if (tag.right().kind() == Tag::Kind::Pair) {
        out += '(';
        print_tag(tag.right(), out);
        out += ')';
      } else {
        print_tag(tag.right(), out);
      }
      return;
  }
}

}  // namespace

bool matching_sub(const NominalHierarchy& h, const Type& t1, const Type& t2) {
  // matches(v, t1) holds exactly for the tags in interp(t1), so those are the
  // only value types the quantifier has to visit.
  for (const Tag& tag : interp(h, t1, Mode::Semantic)) {
    if (!matches(h, type_of_tag(tag), t2)) return false;
  }
  return true;
}

std::string format_tag(const Tag& tag) {
  std::string out;
  print_tag(tag, out);
  return out;
}

std::string format_tagset(const TagSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Tag& t : s) {
    if (!first) out += ", ";
    first = false;
    print_tag(t, out);
  }
  out += "}";
  return out;
}

}  // namespace tagsub
