#include <gtest/gtest.h>

#include "support.hpp"

namespace tagsub::testing {
namespace {

ErrorCode code_of(const std::vector<Declaration>& decls) {
  try {
    NominalHierarchy::validate(decls);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "validation unexpectedly succeeded";
  return ErrorCode::SyntaxError;
}

constexpr auto A = NameKind::Abstract;
constexpr auto C = NameKind::Concrete;

TEST(HierarchyTest, BuiltinMatchesNumericTower) {
  const auto& h = builtin();
  std::vector<Declaration> expected{
      {"Num", A, std::nullopt},  {"Real", A, "Num"}, {"Int", C, "Real"},
      {"Flt", C, "Real"},        {"Cmplx", C, "Num"}, {"Str", C, std::nullopt},
  };
  EXPECT_EQ(h.declarations(), expected);
  EXPECT_EQ(h.concrete_names().size(), 4u);
  EXPECT_EQ(h.abstract_names().size(), 2u);
}

TEST(HierarchyTest, ValidationErrors) {
  EXPECT_EQ(code_of({{"A", A, "B"}, {"B", A, "A"}}), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of({{"A", A, "A"}}), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of({{"Flt", C, std::nullopt}, {"Int", C, "Flt"}}), ErrorCode::ConcreteParent);
  EXPECT_EQ(code_of({{"Int", C, "Real"}}), ErrorCode::UnknownParent);
  EXPECT_EQ(code_of({{"Int", C, std::nullopt}, {"Int", A, std::nullopt}}),
            ErrorCode::DuplicateName);
  EXPECT_EQ(code_of({{"R", A, std::nullopt}, {"S", A, std::nullopt}, {"I", C, "R"}, {"I", C, "S"}}),
            ErrorCode::MultipleParents);
}

TEST(HierarchyTest, ForwardParentReference) {
  auto h = NominalHierarchy::validate({{"Int", C, "Real"}, {"Real", A, std::nullopt}});
  EXPECT_TRUE(h.nominal_subtype(h.lookup("Int"), h.lookup("Real")));
}

TEST(HierarchyTest, NominalSubtypeIsReflexiveTransitiveClosure) {
  const auto& h = builtin();
  auto n = [&](const char* s) { return h.lookup(s); };
  EXPECT_TRUE(h.nominal_subtype(n("Int"), n("Num")));
  EXPECT_TRUE(h.nominal_subtype(n("Int"), n("Int")));
  EXPECT_TRUE(h.nominal_subtype(n("Real"), n("Num")));
  EXPECT_FALSE(h.nominal_subtype(n("Str"), n("Num")));
  EXPECT_FALSE(h.nominal_subtype(n("Num"), n("Real")));
  EXPECT_FALSE(h.nominal_subtype(n("Cmplx"), n("Real")));
}

TEST(HierarchyTest, NominalSubtypeRejectsUnknownNames) {
  const auto& h = builtin();
  try {
    h.nominal_subtype(NominalName{"Foo", C}, h.lookup("Num"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownName);
  }
  // Right spelling, wrong kind.
  EXPECT_THROW(h.nominal_subtype(NominalName{"Real", C}, h.lookup("Num")), Error);
}

TEST(HierarchyTest, OrderRelationPropertiesOnRandomHierarchies) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    auto h = random_hierarchy(rng, 12);
    auto names = h.names();
    for (const auto& a : names)
      for (const auto& b : names) {
        if (a != b && h.nominal_subtype(a, b)) EXPECT_FALSE(h.nominal_subtype(b, a));
        for (const auto& c : names) {
          if (h.nominal_subtype(a, b) && h.nominal_subtype(b, c))
            EXPECT_TRUE(h.nominal_subtype(a, c));
        }
      }
    for (const auto& a : names) {
      EXPECT_TRUE(h.nominal_subtype(a, a));
      for (const auto& c : h.concrete_descendants(a)) EXPECT_TRUE(is_value_type(Type::name(c)));
    }
  }
}

TEST(HierarchyTest, ConcreteDescendantsInDeclarationOrder) {
  const auto& h = builtin();
  auto names = [](const std::vector<NominalName>& ns) {
    std::vector<std::string> out;
    for (const auto& n : ns) out.push_back(n.text);
    return out;
  };
  EXPECT_EQ(names(h.concrete_descendants(h.lookup("Num"))),
            (std::vector<std::string>{"Int", "Flt", "Cmplx"}));
  EXPECT_EQ(names(h.concrete_descendants(h.lookup("Real"))),
            (std::vector<std::string>{"Int", "Flt"}));
  EXPECT_EQ(names(h.concrete_descendants(h.lookup("Str"))), (std::vector<std::string>{"Str"}));
  EXPECT_EQ(names(h.abstract_descendants(h.lookup("Num"))),
            (std::vector<std::string>{"Num", "Real"}));
}

TEST(HierarchyTest, EmptyAbstractIsPermitted) {
  auto h = builtin().extended({"Void", A, std::nullopt});
  EXPECT_TRUE(h.concrete_descendants(h.lookup("Void")).empty());
}

TEST(HierarchyTest, ParsesFileFormat) {
  auto h = parse_hierarchy(
      "# comment line\n"
      "abstract Shape\n"
      "\n"
      "concrete Circle <: Shape   # trailing comment\n"
      "concrete Square <: Shape\n");
  EXPECT_EQ(h.size(), 3u);
  EXPECT_TRUE(h.nominal_subtype(h.lookup("Square"), h.lookup("Shape")));
  EXPECT_EQ(parse_hierarchy(format_hierarchy(h)), h);
}

TEST(HierarchyTest, FileSyntaxErrorsCarryLineNumbers) {
  try {
    parse_hierarchy("abstract Num\nclass Int <: Num\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_hierarchy("concrete Int < Num\n"), Error);
  EXPECT_THROW(parse_hierarchy("concrete 9Int\n"), Error);
  try {
    parse_hierarchy("concrete Int\nconcrete Flt <: Int\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConcreteParent);
  }
}

}  // namespace
}  // namespace tagsub::testing
