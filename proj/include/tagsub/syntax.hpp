#pragma once

#include <string>
#include <string_view>

#include "tagsub/hierarchy.hpp"
#include "tagsub/type.hpp"

namespace tagsub {

/// Grammar:
///
///   type    := union
///   union   := prod ('|' prod)*
///   prod    := primary ('*' primary)*
///   primary := NAME | '(' type ')'
///
/// Both operators are left-associative and '*' binds tighter. The Unicode
/// operators U+00D7 and U+222A are accepted as aliases. Names are resolved
/// against `h`.
///
/// Throws SyntaxError or UnknownName; Error::position() is the byte offset.
Type parse_type(std::string_view src, const NominalHierarchy& h);

/// Minimal-parenthesis rendering; parse_type(print_type(t)) == t.
std::string print_type(const Type& t);

/// Like print_type, but a union nested directly inside another union is
/// always parenthesized, so the association of normal forms stays visible:
/// `(Int|Flt)|Cmplx`.
std::string print_type_grouped(const Type& t);

}  // namespace tagsub
