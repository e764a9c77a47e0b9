#include "tagsub/reductive.hpp"

#include <functional>
#include <map>
#include <set>
#include <utility>

#include "tagsub/error.hpp"
#include "tagsub/normalize.hpp"
#include "tagsub/syntax.hpp"

namespace tagsub {

std::string_view rule_name(ReductiveRule r) {
  switch (r) {
    case ReductiveRule::BaseRefl: return "SR-BaseRefl";
    case ReductiveRule::Nom: return "SR-Nom";
    case ReductiveRule::Pair: return "SR-Pair";
    case ReductiveRule::UnionL: return "SR-UnionL";
    case ReductiveRule::UnionR1: return "SR-UnionR1";
    case ReductiveRule::UnionR2: return "SR-UnionR2";
    case ReductiveRule::NF: return "SR-NF";
  }
  return "?";
}

std::optional<ReductiveRule> parse_reductive_rule(std::string_view name) {
  for (auto r : {ReductiveRule::BaseRefl, ReductiveRule::Nom, ReductiveRule::Pair,
                 ReductiveRule::UnionL, ReductiveRule::UnionR1, ReductiveRule::UnionR2,
                 ReductiveRule::NF}) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

std::size_t ReductiveTrace::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::string to_string(Strategy s) {
  return s == Strategy::NormalizeFirst ? "normalize-first" : "short-path-first";
}

namespace {

// Reflexivity on names: concrete names always; abstract names only in atomic
// mode, where they survive normalization as atoms.
bool base_refl_applies(const NominalName& l, const NominalName& r, Mode m) {
  return l == r && (l.is_concrete() || m == Mode::Atomic);
}

bool nom_applies(const NominalHierarchy& h, const NominalName& l,
                 const NominalName& r, Mode m) {
  if (l == r) return false;
  if (l.is_abstract() && m == Mode::Semantic) return false;
  return h.nominal_subtype(l, r);
}

class Prover {
 public:
  Prover(const NominalHierarchy& h, Mode m) : h_(h), mode_(m) {}

  bool normalize_first(const Type& l, const Type& r, ReductiveTrace* out) {
    if (!out) return all_disjuncts_below(l, r);
    const Type n = normalize(h_, l, mode_);
    ReductiveTrace child{ReductiveRule::NF, n, r, {}};
    if (!decide(n, r, out ? &child : nullptr, false)) return false;
    if (out) *out = ReductiveTrace{ReductiveRule::NF, l, r, {std::move(child)}};
    return true;
  }

  bool short_path(const Type& l, const Type& r, ReductiveTrace* out) {
    return decide(l, r, out, true);
  }

 private:
  // Syntax-directed search. With allow_local_nf, a node whose lhs is not in
  // normal form may be closed by SR-NF after the other rules fail; below that
  // node the lhs is normal, so SR-NF is never needed again on the same path.
  bool decide(const Type& l, const Type& r, ReductiveTrace* out, bool allow_local_nf) {
    if (syntactic(l, r, out, allow_local_nf)) return true;
    if (!allow_local_nf || l.is_union()) return false;

    auto key = std::make_pair(l, r);
    if (failed_.count(key)) return false;
    if (!out) {
      if (all_disjuncts_below(l, r)) return true;
      failed_.insert(std::move(key));
      return false;
    }
    const Type& n = normal_of(l);
    if (n != l) {
      ReductiveTrace child{ReductiveRule::NF, n, r, {}};
      if (decide(n, r, out ? &child : nullptr, false)) {
        if (out) *out = ReductiveTrace{ReductiveRule::NF, l, r, {std::move(child)}};
        return true;
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  bool syntactic(const Type& l, const Type& r, ReductiveTrace* out, bool local) {
    if (l.is_union()) {
      ReductiveTrace a{ReductiveRule::UnionL, l, r, {}}, b = a;
      if (!decide(l.left(), r, out ? &a : nullptr, local)) return false;
      if (!decide(l.right(), r, out ? &b : nullptr, local)) return false;
      if (out) *out = ReductiveTrace{ReductiveRule::UnionL, l, r, {std::move(a), std::move(b)}};
      return true;
    }
    if (r.is_union()) {
      ReductiveTrace a{ReductiveRule::UnionR1, l, r, {}};
      if (decide(l, r.left(), out ? &a : nullptr, local)) {
        if (out) *out = ReductiveTrace{ReductiveRule::UnionR1, l, r, {std::move(a)}};
        return true;
      }
      if (decide(l, r.right(), out ? &a : nullptr, local)) {
        if (out) *out = ReductiveTrace{ReductiveRule::UnionR2, l, r, {std::move(a)}};
        return true;
      }
      return false;
    }
    if (l.is_name() && r.is_name()) {
      if (base_refl_applies(l.nominal(), r.nominal(), mode_)) {
        if (out) *out = ReductiveTrace{ReductiveRule::BaseRefl, l, r, {}};
        return true;
      }
      if (nom_applies(h_, l.nominal(), r.nominal(), mode_)) {
        if (out) *out = ReductiveTrace{ReductiveRule::Nom, l, r, {}};
        return true;
      }
      return false;
    }
    if (l.is_pair() && r.is_pair()) {
      ReductiveTrace a{ReductiveRule::Pair, l, r, {}}, b = a;
      if (!decide(l.left(), r.left(), out ? &a : nullptr, local)) return false;
      if (!decide(l.right(), r.right(), out ? &b : nullptr, local)) return false;
      if (out) *out = ReductiveTrace{ReductiveRule::Pair, l, r, {std::move(a), std::move(b)}};
      return true;
    }
    return false;
  }

  // Without a trace, SR-NF followed by SR-UnionL over the normal form is
  // decided one disjunct at a time, stopping at the first that fails; the
  // normal form itself is never built.
  bool all_disjuncts_below(const Type& l, const Type& r) {
    return each_disjunct(l, [&](const Type& d) { return decide(d, r, nullptr, false); });
  }

  // Calls f on each disjunct of normalize(t) in order while f returns true.
  bool each_disjunct(const Type& t, const std::function<bool(const Type&)>& f) {
    switch (t.kind()) {
      case Type::Kind::Name:
        if (mode_ == Mode::Atomic || t.nominal().is_concrete()) return f(t);
        for (const Type& leaf : leaves_of(t.nominal())) {
          if (!f(leaf)) return false;
        }
        return true;
      case Type::Kind::Union:
        return each_disjunct(t.left(), f) && each_disjunct(t.right(), f);
      case Type::Kind::Pair:
        return each_disjunct(t.left(), [&](const Type& a) {
          return each_disjunct(t.right(), [&](const Type& b) { return f(Type::pair(a, b)); });
        });
    }
    return true;
  }

  const std::vector<Type>& leaves_of(const NominalName& n) {
    auto it = leaves_.find(n.text);
    if (it == leaves_.end()) {
      std::vector<Type> ts;
      for (const auto& c : h_.concrete_descendants(n)) ts.push_back(Type::name(c));
      if (ts.empty()) {
        throw Error(ErrorCode::EmptyAbstract, "'" + n.text + "' has no concrete descendants");
      }
      it = leaves_.emplace(n.text, std::move(ts)).first;
    }
    return it->second;
  }

  const Type& normal_of(const Type& t) {
    auto it = normal_cache_.find(t);
    if (it == normal_cache_.end()) it = normal_cache_.emplace(t, normalize(h_, t, mode_)).first;
    return it->second;
  }

  const NominalHierarchy& h_;
  Mode mode_;
  std::set<std::pair<Type, Type>> failed_;
  std::map<Type, Type> normal_cache_;
  std::map<std::string, std::vector<Type>> leaves_;
};

// Throws EmptyAbstract iff nf(h, t) would.
void require_normalizable(const NominalHierarchy& h, const Type& t) {
  if (t.is_name()) {
    const NominalName& n = t.nominal();
    if (n.is_abstract() && h.concrete_descendants(n).empty()) {
      throw Error(ErrorCode::EmptyAbstract, "'" + n.text + "' has no concrete descendants");
    }
    return;
  }
  require_normalizable(h, t.left());
  require_normalizable(h, t.right());
}

bool run(const NominalHierarchy& h, const Type& t1, const Type& t2, Mode m,
         Strategy s, ReductiveTrace* out) {
  require_well_formed(h, t1);
  require_well_formed(h, t2);
  Prover prover(h, m);
  if (s == Strategy::NormalizeFirst && m == Mode::Semantic) require_normalizable(h, t1);
  if (s == Strategy::ShortPathFirst) {
    // Surface EmptyAbstract exactly as NormalizeFirst would.
    if (m == Mode::Semantic) require_normalizable(h, t1);
    if (prover.short_path(t1, t2, out)) return true;
  }
  return prover.normalize_first(t1, t2, out);
}

bool check_node(const NominalHierarchy& h, const ReductiveTrace& tr, Mode m) {
  const Type& l = tr.lhs;
  const Type& r = tr.rhs;
  const auto& ps = tr.premises;
  auto concludes = [](const ReductiveTrace& p, const Type& a, const Type& b) {
    return p.lhs == a && p.rhs == b;
  };
  switch (tr.rule) {
    case ReductiveRule::BaseRefl:
      return ps.empty() && l.is_name() && r.is_name() &&
             base_refl_applies(l.nominal(), r.nominal(), m);
    case ReductiveRule::Nom:
      return ps.empty() && l.is_name() && r.is_name() &&
             nom_applies(h, l.nominal(), r.nominal(), m);
    case ReductiveRule::Pair:
      return ps.size() == 2 && l.is_pair() && r.is_pair() &&
             concludes(ps[0], l.left(), r.left()) && concludes(ps[1], l.right(), r.right());
    case ReductiveRule::UnionL:
      return ps.size() == 2 && l.is_union() && concludes(ps[0], l.left(), r) &&
             concludes(ps[1], l.right(), r);
    case ReductiveRule::UnionR1:
      return ps.size() == 1 && r.is_union() && concludes(ps[0], l, r.left());
    case ReductiveRule::UnionR2:
      return ps.size() == 1 && r.is_union() && concludes(ps[0], l, r.right());
    case ReductiveRule::NF:
      return ps.size() == 1 && concludes(ps[0], normalize(h, l, m), r);
  }
  return false;
}

bool check_tree(const NominalHierarchy& h, const ReductiveTrace& tr, Mode m) {
  if (!check_node(h, tr, m)) return false;
  for (const auto& p : tr.premises) {
    if (!check_tree(h, p, m)) return false;
  }
  return true;
}

void format_into(const ReductiveTrace& tr, std::size_t indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += rule_name(tr.rule);
  out += ": ";
  out += print_type(tr.lhs);
  out += " <: ";
  out += print_type(tr.rhs);
  out += '\n';
  for (const auto& p : tr.premises) format_into(p, indent + 1, out);
}

}  // namespace

ReductiveResult reductive_sub(const NominalHierarchy& h, const Type& t1,
                              const Type& t2, Mode m, Strategy s) {
  ReductiveTrace trace{ReductiveRule::NF, t1, t2, {}};
  if (!run(h, t1, t2, m, s, &trace)) return {};
  return {true, std::move(trace)};
}

bool is_subtype(const NominalHierarchy& h, const Type& t1, const Type& t2, Mode m,
                Strategy s) {
  return run(h, t1, t2, m, s, nullptr);
}

bool equivalent(const NominalHierarchy& h, const Type& t1, const Type& t2, Mode m) {
  return is_subtype(h, t1, t2, m) && is_subtype(h, t2, t1, m);
}

bool check_reductive_trace(const NominalHierarchy& h, const ReductiveTrace& tr,
                           Mode m) {
  try {
    return check_tree(h, tr, m);
  } catch (const Error&) {
    return false;
  }
}

std::string format_trace(const ReductiveTrace& tr) {
  std::string out;
  format_into(tr, 0, out);
  return out;
}

}  // namespace tagsub
