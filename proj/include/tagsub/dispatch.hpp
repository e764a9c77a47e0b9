#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagsub/hierarchy.hpp"
#include "tagsub/semantics.hpp"
#include "tagsub/type.hpp"

namespace tagsub {

/// One method of a generic function. n-ary signatures are right-nested
/// pairs: (A, B, C) is A*(B*C).
struct MethodDef {
  std::string function;
  Type signature;
  std::string body;

  friend bool operator==(const MethodDef&, const MethodDef&) = default;
};

struct DispatchOutcome {
  enum class Status { Selected, NoApplicableMethod, Ambiguous };

  Status status = Status::NoApplicableMethod;
  std::optional<MethodDef> method;     // Selected
  std::vector<MethodDef> candidates;   // Ambiguous: every applicable method
};

/// Tuple-type multiple dispatch over a fixed hierarchy and subtyping mode.
///
/// Defining a method whose signature is equivalent (mutual subtypes) to an
/// existing method of the same function replaces that method in place.
class MethodTable {
 public:
  MethodTable(NominalHierarchy h, Mode m);

  const NominalHierarchy& hierarchy() const noexcept { return hierarchy_; }
  Mode mode() const noexcept { return mode_; }
  const std::vector<MethodDef>& methods() const noexcept { return methods_; }
  /// Every method ever added, in order, including replaced ones.
  const std::vector<MethodDef>& program() const noexcept { return program_; }

  /// Throws UnknownName if the signature mentions an undeclared name.
  void add_method(MethodDef m);

  /// Methods of `function` whose signature is a supertype of `call`, in
  /// table order. Throws UnknownFunction.
  std::vector<MethodDef> applicable(std::string_view function, const Type& call) const;

  /// Picks the applicable method whose signature is a subtype of every other
  /// applicable signature. Throws UnknownFunction.
  DispatchOutcome resolve(std::string_view function, const Type& call) const;

  /// Replays program() against another hierarchy, e.g. after a new
  /// declaration was added.
  MethodTable rebuilt(NominalHierarchy h) const;

 private:
  bool has_function(std::string_view function) const;

  NominalHierarchy hierarchy_;
  Mode mode_;
  std::vector<MethodDef> methods_;
  std::vector<MethodDef> program_;
};

/// A parsed method file:
///
///   mode semantic|atomic
///   method <fn> <type-expr> => <body-label>
///
/// `#` starts a comment. The mode line is optional (default semantic) and
/// must precede the first method.
struct MethodFile {
  Mode mode = Mode::Semantic;
  std::vector<MethodDef> methods;
};

/// Throws SyntaxError (position = line number) or UnknownName.
MethodFile parse_method_file(std::string_view text, const NominalHierarchy& h);
MethodFile load_method_file(const std::string& path, const NominalHierarchy& h);

/// Builds a table by adding every method of the file in order.
MethodTable build_table(const MethodFile& file, const NominalHierarchy& h);

}  // namespace tagsub
