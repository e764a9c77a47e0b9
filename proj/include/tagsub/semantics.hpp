#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>

#include "tagsub/hierarchy.hpp"
#include "tagsub/type.hpp"

namespace tagsub {

/// Semantic: abstract names mean exactly their current concrete
/// descendants. Atomic: every abstract name also contains a sentinel tag
/// standing for a future subtype, so it is never exhausted by a union.
enum class Mode { Semantic, Atomic };

std::string to_string(Mode m);

/// A run-time type tag: a concrete name, a pair of tags, or the sentinel
/// E(a) of an abstract name a (atomic mode only).
///
/// Ordering is concrete < pair < sentinel, then lexicographic.
class Tag {
 public:
  enum class Kind { Concrete, Pair, Sentinel };

  static Tag concrete(std::string name);
  static Tag sentinel(std::string owner);
  static Tag pair(Tag left, Tag right);
  /// Lifts a value type. Throws NotAValueType otherwise.
  static Tag of_value_type(const Type& v);

  Kind kind() const noexcept;
  /// Concrete name or sentinel owner.
  const std::string& name() const;
  const Tag& left() const;
  const Tag& right() const;

  bool has_sentinel() const noexcept;

  friend bool operator==(const Tag& a, const Tag& b);
  friend std::strong_ordering operator<=>(const Tag& a, const Tag& b);

 private:
  struct Node;
  explicit Tag(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using TagSet = std::set<Tag>;

/// Tag interpretation of a type. Throws UnknownName when `t` mentions a
/// name the hierarchy does not declare.
TagSet interp(const NominalHierarchy& h, const Type& t, Mode m);

/// The matching relation v <$ t. Throws NotAValueType if `v` is not a value
/// type.
bool matches(const NominalHierarchy& h, const Type& v, const Type& t);

/// interp(t1) is a subset of interp(t2).
bool semantic_sub(const NominalHierarchy& h, const Type& t1, const Type& t2,
                  Mode m);

/// Every tag of t1 matches t2. Semantic mode only.
bool matching_sub(const NominalHierarchy& h, const Type& t1, const Type& t2);

std::string format_tag(const Tag& tag);
/// `{Cmplx, Flt, Int}`; tags in canonical order.
std::string format_tagset(const TagSet& s);

}  // namespace tagsub
