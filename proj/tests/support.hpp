#pragma once

// Shared helpers for the test suites: exhaustive enumerators, random
// generators, and a brute-force tag oracle that does not use the library's
// interpretation code.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tagsub/tagsub.hpp"

namespace tagsub::testing {

inline const NominalHierarchy& builtin() { return NominalHierarchy::builtin(); }

inline Type T(std::string_view src, const NominalHierarchy& h = builtin()) {
  return parse_type(src, h);
}

inline std::vector<Type> atoms(const NominalHierarchy& h) {
  std::vector<Type> out;
  for (const auto& n : h.names()) out.push_back(Type::name(n));
  return out;
}

/// All types of depth <= max_depth built from the hierarchy's names
/// (a name has depth 1). Over the built-in hierarchy: 6, 78, 12174.
inline std::vector<Type> enumerate_types(const NominalHierarchy& h, int max_depth) {
  std::vector<Type> all = atoms(h);
  for (int d = 2; d <= max_depth; ++d) {
    std::vector<Type> next = atoms(h);
    for (const auto& a : all)
      for (const auto& b : all) {
        next.push_back(Type::pair(a, b));
        next.push_back(Type::union_of(a, b));
      }
    all = std::move(next);
  }
  return all;
}

/// All value types of depth <= max_depth. Over the built-in hierarchy:
/// 4, 20, 404.
inline std::vector<Type> enumerate_value_types(const NominalHierarchy& h, int max_depth) {
  std::vector<Type> leaves;
  for (const auto& n : h.concrete_names()) leaves.push_back(Type::name(n));
  std::vector<Type> all = leaves;
  for (int d = 2; d <= max_depth; ++d) {
    std::vector<Type> next = leaves;
    for (const auto& a : all)
      for (const auto& b : all) next.push_back(Type::pair(a, b));
    all = std::move(next);
  }
  return all;
}

/// Random type of depth <= max_depth. Inner nodes appear with probability
/// 1 - leaf_prob, split evenly between pairs and unions.
inline Type random_type(std::mt19937_64& rng, const NominalHierarchy& h, int max_depth,
                        double leaf_prob = 0.4) {
  const auto names = h.names();
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::bernoulli_distribution leaf(leaf_prob);
  std::bernoulli_distribution coin(0.5);
  if (max_depth <= 1 || leaf(rng)) return Type::name(names[pick(rng)]);
  Type a = random_type(rng, h, max_depth - 1, leaf_prob);
  Type b = random_type(rng, h, max_depth - 1, leaf_prob);
  return coin(rng) ? Type::pair(std::move(a), std::move(b))
                   : Type::union_of(std::move(a), std::move(b));
}

/// Random valid hierarchy with at most max_names names in which every
/// abstract name has at least one concrete descendant.
inline NominalHierarchy random_hierarchy_once(std::mt19937_64& rng, std::size_t max_names) {
  std::uniform_int_distribution<std::size_t> count(2, max_names);
  const std::size_t n = count(rng);
  std::vector<Declaration> decls;
  std::vector<std::size_t> abstracts;
  std::bernoulli_distribution is_abstract(0.4);
  std::bernoulli_distribution is_root(0.3);
  for (std::size_t i = 0; i < n; ++i) {
    Declaration d;
    d.name = "N" + std::to_string(i);
    d.kind = is_abstract(rng) ? NameKind::Abstract : NameKind::Concrete;
    if (!abstracts.empty() && !is_root(rng)) {
      std::uniform_int_distribution<std::size_t> p(0, abstracts.size() - 1);
      d.parent = decls[abstracts[p(rng)]].name;
    }
    if (d.kind == NameKind::Abstract) abstracts.push_back(i);
    decls.push_back(std::move(d));
  }
  // Give every abstract name without a concrete descendant a fresh leaf.
  auto h = NominalHierarchy::validate(decls);
  for (std::size_t idx : abstracts) {
    const NominalName a{decls[idx].name, NameKind::Abstract};
    if (h.concrete_descendants(a).empty()) {
      decls.push_back(Declaration{"L" + std::to_string(idx), NameKind::Concrete, a.text});
      h = NominalHierarchy::validate(decls);
    }
  }
  return h;
}

inline NominalHierarchy random_hierarchy(std::mt19937_64& rng, std::size_t max_names) {
  for (;;) {
    auto h = random_hierarchy_once(rng, max_names);
    if (h.size() <= max_names) return h;
  }
}

/// Brute-force tag oracle: tags rendered as strings, computed straight from
/// the declaration list by walking parent links.
class BruteOracle {
 public:
  explicit BruteOracle(const NominalHierarchy& h) : decls_(h.declarations()) {}

  std::set<std::string> tags(const Type& t, bool atomic) const {
    std::set<std::string> out;
    if (t.is_name()) {
      for (const auto& d : decls_) {
        if (!below(d.name, t.nominal().text)) continue;
        if (d.kind == NameKind::Concrete) out.insert(d.name);
        else if (atomic) out.insert("E(" + d.name + ")");
      }
    } else if (t.is_pair()) {
      for (const auto& a : tags(t.left(), atomic))
        for (const auto& b : tags(t.right(), atomic)) out.insert("<" + a + "," + b + ">");
    } else {
      out = tags(t.left(), atomic);
      auto r = tags(t.right(), atomic);
      out.insert(r.begin(), r.end());
    }
    return out;
  }

  bool subset(const Type& a, const Type& b, bool atomic) const {
    auto x = tags(a, atomic);
    auto y = tags(b, atomic);
    for (const auto& s : x)
      if (!y.count(s)) return false;
    return true;
  }

 private:
  bool below(const std::string& n, const std::string& target) const {
    std::string cur = n;
    for (std::size_t steps = 0; steps <= decls_.size(); ++steps) {
      if (cur == target) return true;
      const Declaration* d = find(cur);
      if (!d || !d->parent) return false;
      cur = *d->parent;
    }
    return false;
  }

  const Declaration* find(const std::string& n) const {
    for (const auto& d : decls_)
      if (d.name == n) return &d;
    return nullptr;
  }

  std::vector<Declaration> decls_;
};

/// Number of SR-NF nodes on the worst root-to-leaf path.
inline std::size_t max_nf_on_path(const ReductiveTrace& tr) {
  std::size_t best = 0;
  for (const auto& p : tr.premises) best = std::max(best, max_nf_on_path(p));
  return best + (tr.rule == ReductiveRule::NF ? 1 : 0);
}

}  // namespace tagsub::testing
