#include "tagsub/derivation.hpp"

#include "tagsub/error.hpp"
#include "tagsub/normalize.hpp"
#include "tagsub/syntax.hpp"

namespace tagsub {

std::string_view rule_name(DeclRule r) {
  switch (r) {
    case DeclRule::Refl: return "SD-Refl";
    case DeclRule::Trans: return "SD-Trans";
    case DeclRule::Nom: return "SD-Nom";
    case DeclRule::AbsUnion: return "SD-AbsUnion";
    case DeclRule::Pair: return "SD-Pair";
    case DeclRule::UnionL: return "SD-UnionL";
    case DeclRule::UnionR1: return "SD-UnionR1";
    case DeclRule::UnionR2: return "SD-UnionR2";
    case DeclRule::Distr1: return "SD-Distr1";
    case DeclRule::Distr2: return "SD-Distr2";
  }
  return "?";
}

std::size_t Derivation::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

namespace {

Derivation leaf(DeclRule r, Type l, Type rhs) {
  return Derivation{r, std::move(l), std::move(rhs), {}, std::nullopt};
}

Derivation node(DeclRule r, Type l, Type rhs, std::vector<Derivation> ps) {
  return Derivation{r, std::move(l), std::move(rhs), std::move(ps), std::nullopt};
}

Derivation trans(Derivation first, Derivation second) {
  Type l = first.lhs;
  Type r = second.rhs;
  Type w = first.rhs;
  return Derivation{DeclRule::Trans, std::move(l), std::move(r),
                    {std::move(first), std::move(second)}, std::move(w)};
}

// From a <= a' and b <= b', derive a|b <= a'|b'.
Derivation union_mono(Derivation da, Derivation db) {
  Type target = Type::union_of(da.rhs, db.rhs);
  Type source = Type::union_of(da.lhs, db.lhs);
  Derivation left = trans(std::move(da), leaf(DeclRule::UnionR1, target.left(), target));
  Derivation right = trans(std::move(db), leaf(DeclRule::UnionR2, target.right(), target));
  return node(DeclRule::UnionL, std::move(source), std::move(target),
              {std::move(left), std::move(right)});
}

// x*y <= un_prs(x, y), following the clauses of un_prs.
Derivation pair_to_unprs(const Type& x, const Type& y) {
  const Type p = Type::pair(x, y);
  if (x.is_union()) {
    Type split = Type::union_of(Type::pair(x.left(), y), Type::pair(x.right(), y));
    return trans(leaf(DeclRule::Distr1, p, split),
                 union_mono(pair_to_unprs(x.left(), y), pair_to_unprs(x.right(), y)));
  }
  if (y.is_union()) {
    Type split = Type::union_of(Type::pair(x, y.left()), Type::pair(x, y.right()));
    return trans(leaf(DeclRule::Distr2, p, split),
                 union_mono(pair_to_unprs(x, y.left()), pair_to_unprs(x, y.right())));
  }
  return leaf(DeclRule::Refl, p, p);
}

// un_prs(x, y) <= x*y.
Derivation unprs_to_pair(const Type& x, const Type& y) {
  const Type p = Type::pair(x, y);
  if (x.is_union()) {
    Derivation a = trans(unprs_to_pair(x.left(), y),
                         node(DeclRule::Pair, Type::pair(x.left(), y), p,
                              {leaf(DeclRule::UnionR1, x.left(), x), leaf(DeclRule::Refl, y, y)}));
    Derivation b = trans(unprs_to_pair(x.right(), y),
                         node(DeclRule::Pair, Type::pair(x.right(), y), p,
                              {leaf(DeclRule::UnionR2, x.right(), x), leaf(DeclRule::Refl, y, y)}));
    Type lhs = Type::union_of(a.lhs, b.lhs);
    return node(DeclRule::UnionL, std::move(lhs), p, {std::move(a), std::move(b)});
  }
  if (y.is_union()) {
    Derivation a = trans(unprs_to_pair(x, y.left()),
                         node(DeclRule::Pair, Type::pair(x, y.left()), p,
                              {leaf(DeclRule::Refl, x, x), leaf(DeclRule::UnionR1, y.left(), y)}));
    Derivation b = trans(unprs_to_pair(x, y.right()),
                         node(DeclRule::Pair, Type::pair(x, y.right()), p,
                              {leaf(DeclRule::Refl, x, x), leaf(DeclRule::UnionR2, y.right(), y)}));
    Type lhs = Type::union_of(a.lhs, b.lhs);
    return node(DeclRule::UnionL, std::move(lhs), p, {std::move(a), std::move(b)});
  }
  return leaf(DeclRule::Refl, p, p);
}

// Each member of a union of concrete names is below `target` by SD-Nom.
Derivation members_below(const Type& u, const Type& target) {
  if (u.is_union()) {
    return node(DeclRule::UnionL, u, target,
                {members_below(u.left(), target), members_below(u.right(), target)});
  }
  return leaf(DeclRule::Nom, u, target);
}

bool check_node(const NominalHierarchy& h, const Derivation& d, Mode m) {
  const Type& l = d.lhs;
  const Type& r = d.rhs;
  const auto& ps = d.premises;
  auto concludes = [](const Derivation& p, const Type& a, const Type& b) {
    return p.lhs == a && p.rhs == b;
  };
  if (d.rule != DeclRule::Trans && d.witness) return false;
  switch (d.rule) {
    case DeclRule::Refl:
      return ps.empty() && l == r;
    case DeclRule::Trans:
      return d.witness && ps.size() == 2 && concludes(ps[0], l, *d.witness) &&
             concludes(ps[1], *d.witness, r);
    case DeclRule::Nom:
      return ps.empty() && l.is_name() && r.is_name() && l != r &&
             h.nominal_subtype(l.nominal(), r.nominal());
    case DeclRule::AbsUnion: {
      if (m != Mode::Semantic || !ps.empty() || !l.is_name() || !l.nominal().is_abstract())
        return false;
      auto leaves = h.concrete_descendants(l.nominal());
      return !leaves.empty() && r == left_nested_union(leaves);
    }
    case DeclRule::Pair:
      return ps.size() == 2 && l.is_pair() && r.is_pair() &&
             concludes(ps[0], l.left(), r.left()) && concludes(ps[1], l.right(), r.right());
    case DeclRule::UnionL:
      return ps.size() == 2 && l.is_union() && concludes(ps[0], l.left(), r) &&
             concludes(ps[1], l.right(), r);
    case DeclRule::UnionR1:
      return ps.empty() && r.is_union() && r.left() == l;
    case DeclRule::UnionR2:
      return ps.empty() && r.is_union() && r.right() == l;
    case DeclRule::Distr1:
      return ps.empty() && l.is_pair() && l.left().is_union() &&
             r == Type::union_of(Type::pair(l.left().left(), l.right()),
                                 Type::pair(l.left().right(), l.right()));
    case DeclRule::Distr2:
      return ps.empty() && l.is_pair() && l.right().is_union() &&
             r == Type::union_of(Type::pair(l.left(), l.right().left()),
                                 Type::pair(l.left(), l.right().right()));
  }
  return false;
}

bool check_tree(const NominalHierarchy& h, const Derivation& d, Mode m) {
  if (!check_node(h, d, m)) return false;
  for (const auto& p : d.premises) {
    if (!check_tree(h, p, m)) return false;
  }
  return true;
}

Derivation translate(const NominalHierarchy& h, const ReductiveTrace& tr, Mode m) {
  const auto& ps = tr.premises;
  switch (tr.rule) {
    case ReductiveRule::BaseRefl:
      return leaf(DeclRule::Refl, tr.lhs, tr.rhs);
    case ReductiveRule::Nom:
      return leaf(DeclRule::Nom, tr.lhs, tr.rhs);
    case ReductiveRule::Pair:
      return node(DeclRule::Pair, tr.lhs, tr.rhs,
                  {translate(h, ps[0], m), translate(h, ps[1], m)});
    case ReductiveRule::UnionL:
      return node(DeclRule::UnionL, tr.lhs, tr.rhs,
                  {translate(h, ps[0], m), translate(h, ps[1], m)});
    case ReductiveRule::UnionR1:
      return trans(translate(h, ps[0], m), leaf(DeclRule::UnionR1, tr.rhs.left(), tr.rhs));
    case ReductiveRule::UnionR2:
      return trans(translate(h, ps[0], m), leaf(DeclRule::UnionR2, tr.rhs.right(), tr.rhs));
    case ReductiveRule::NF:
      return trans(derive_sub_nf(h, tr.lhs, m), translate(h, ps[0], m));
  }
  throw Error(ErrorCode::InvalidTrace, "unknown rule");
}

void format_into(const Derivation& d, std::size_t indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += rule_name(d.rule);
  out += ": ";
  out += print_type(d.lhs);
  out += " <: ";
  out += print_type(d.rhs);
  out += '\n';
  if (d.witness) {
    out.append((indent + 1) * 2, ' ');
    out += "witness: " + print_type(*d.witness) + '\n';
  }
  for (const auto& p : d.premises) format_into(p, indent + 1, out);
}

}  // namespace

bool check_declarative(const NominalHierarchy& h, const Derivation& d, Mode m) {
  try {
    return check_tree(h, d, m);
  } catch (const Error&) {
    return false;
  }
}

Derivation synthesize(const NominalHierarchy& h, const ReductiveTrace& tr, Mode m) {
  if (!check_reductive_trace(h, tr, m)) {
    throw Error(ErrorCode::InvalidTrace, "trace does not check under " + to_string(m) + " mode");
  }
  return translate(h, tr, m);
}

Derivation derive_sub_nf(const NominalHierarchy& h, const Type& t, Mode m) {
  switch (t.kind()) {
    case Type::Kind::Name: {
      const Type n = normalize(h, t, m);
      if (n == t) return leaf(DeclRule::Refl, t, t);
      return leaf(DeclRule::AbsUnion, t, n);
    }
    case Type::Kind::Pair: {
      Derivation a = derive_sub_nf(h, t.left(), m);
      Derivation b = derive_sub_nf(h, t.right(), m);
      Type x = a.rhs;
      Type y = b.rhs;
      Derivation mid = node(DeclRule::Pair, t, Type::pair(x, y), {std::move(a), std::move(b)});
      return trans(std::move(mid), pair_to_unprs(x, y));
    }
    case Type::Kind::Union:
      return union_mono(derive_sub_nf(h, t.left(), m), derive_sub_nf(h, t.right(), m));
  }
  throw Error(ErrorCode::InvalidTrace, "unreachable");
}

Derivation derive_nf_sub(const NominalHierarchy& h, const Type& t, Mode m) {
  switch (t.kind()) {
    case Type::Kind::Name: {
      const Type n = normalize(h, t, m);
      if (n == t) return leaf(DeclRule::Refl, t, t);
      return members_below(n, t);
    }
    case Type::Kind::Pair: {
      Derivation a = derive_nf_sub(h, t.left(), m);
      Derivation b = derive_nf_sub(h, t.right(), m);
      Type x = a.lhs;
      Type y = b.lhs;
      Derivation top = node(DeclRule::Pair, Type::pair(x, y), t, {std::move(a), std::move(b)});
      return trans(unprs_to_pair(x, y), std::move(top));
    }
    case Type::Kind::Union:
      return union_mono(derive_nf_sub(h, t.left(), m), derive_nf_sub(h, t.right(), m));
  }
  throw Error(ErrorCode::InvalidTrace, "unreachable");
}

std::string format_derivation(const Derivation& d) {
  std::string out;
  format_into(d, 0, out);
  return out;
}

}  // namespace tagsub
