#include "tagsub/normalize.hpp"

#include <cassert>

#include "tagsub/error.hpp"

namespace tagsub {

namespace {

void require_declared(const NominalHierarchy& h, const NominalName& n) {
  if (h.find(n.text) != n) {
    throw Error(ErrorCode::UnknownName, "undeclared name '" + n.text + "'");
  }
}

}  // namespace

Type left_nested_union(const std::vector<NominalName>& names) {
  assert(!names.empty());
  Type acc = Type::name(names.front());
  for (std::size_t i = 1; i < names.size(); ++i) {
    acc = Type::union_of(std::move(acc), Type::name(names[i]));
  }
  return acc;
}

Type un_prs(const Type& t1, const Type& t2) {
  if (t1.is_union()) {
    return Type::union_of(un_prs(t1.left(), t2), un_prs(t1.right(), t2));
  }
  if (t2.is_union()) {
    return Type::union_of(un_prs(t1, t2.left()), un_prs(t1, t2.right()));
  }
  return Type::pair(t1, t2);
}

Type nf(const NominalHierarchy& h, const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Name: {
      const NominalName& n = t.nominal();
      if (n.is_concrete()) {
        require_declared(h, n);
        return t;
      }
      auto leaves = h.concrete_descendants(n);
      if (leaves.empty()) {
        throw Error(ErrorCode::EmptyAbstract,
                    "'" + n.text + "' has no concrete descendants");
      }
      return left_nested_union(leaves);
    }
    case Type::Kind::Pair:
      return un_prs(nf(h, t.left()), nf(h, t.right()));
    case Type::Kind::Union:
      return Type::union_of(nf(h, t.left()), nf(h, t.right()));
  }
  return t;
}

bool in_nf(const Type& t) {
  if (is_value_type(t)) return true;
  return t.is_union() && in_nf(t.left()) && in_nf(t.right());
}

Type nf_atomic(const NominalHierarchy& h, const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Name:
      require_declared(h, t.nominal());
      return t;
    case Type::Kind::Pair:
      return un_prs(nf_atomic(h, t.left()), nf_atomic(h, t.right()));
    case Type::Kind::Union:
      return Type::union_of(nf_atomic(h, t.left()), nf_atomic(h, t.right()));
  }
  return t;
}

bool is_atom(const Type& t) { return t.is_name(); }

namespace {

bool is_atom_tuple(const Type& t) {
  if (is_atom(t)) return true;
  return t.is_pair() && is_atom_tuple(t.left()) && is_atom_tuple(t.right());
}

}  // namespace

bool in_nf_atomic(const Type& t) {
  if (is_atom_tuple(t)) return true;
  return t.is_union() && in_nf_atomic(t.left()) && in_nf_atomic(t.right());
}

Type normalize(const NominalHierarchy& h, const Type& t, Mode m) {
  return m == Mode::Semantic ? nf(h, t) : nf_atomic(h, t);
}

bool in_normal_form(const Type& t, Mode m) {
  return m == Mode::Semantic ? in_nf(t) : in_nf_atomic(t);
}

}  // namespace tagsub
