#include <gtest/gtest.h>

#include "support.hpp"

namespace tagsub::testing {
namespace {

using Status = DispatchOutcome::Status;

MethodDef M(std::string body, std::string_view sig, const NominalHierarchy& h = builtin()) {
  return MethodDef{"plus", T(sig, h), std::move(body)};
}

MethodTable three(Mode m, const NominalHierarchy& h = builtin()) {
  MethodTable t(h, m);
  t.add_method(M("mII", "Int*Int", h));
  t.add_method(M("mFF", "Flt*Flt", h));
  t.add_method(M("mUU", "(Int|Flt)*(Int|Flt)", h));
  return t;
}

std::vector<std::string> bodies(const std::vector<MethodDef>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.body);
  return out;
}

std::string selected(const MethodTable& t, std::string_view call) {
  auto out = t.resolve("plus", T(call, t.hierarchy()));
  if (out.status != Status::Selected) return "<none>";
  return out.method->body;
}

const NominalHierarchy& with_int8() {
  static const NominalHierarchy h =
      builtin().extended({"Int8", NameKind::Concrete, std::string("Real")});
  return h;
}

TEST(DispatchTest, ApplicableMethods) {
  for (Mode m : {Mode::Semantic, Mode::Atomic}) {
    auto t = three(m);
    EXPECT_EQ(bodies(t.applicable("plus", T("Int*Int"))),
              (std::vector<std::string>{"mII", "mUU"}));
    EXPECT_EQ(bodies(t.applicable("plus", T("Flt*Int"))), (std::vector<std::string>{"mUU"}));
    EXPECT_TRUE(t.applicable("plus", T("Str*Str")).empty());
  }
}

TEST(DispatchTest, MostSpecificMethodWins) {
  for (Mode m : {Mode::Semantic, Mode::Atomic}) {
    auto t = three(m);
    EXPECT_EQ(selected(t, "Int*Int"), "mII");
    EXPECT_EQ(selected(t, "Flt*Flt"), "mFF");
    EXPECT_EQ(selected(t, "Flt*Int"), "mUU");
    EXPECT_EQ(t.resolve("plus", T("Str*Str")).status, Status::NoApplicableMethod);
  }
}

TEST(DispatchTest, SemanticModeReplacementIsFragile) {
  auto t = three(Mode::Semantic);
  t.add_method(M("mRR", "Real*Real"));
  EXPECT_EQ(bodies(t.methods()), (std::vector<std::string>{"mII", "mFF", "mRR"}));
  EXPECT_EQ(t.program().size(), 4u);
  EXPECT_EQ(selected(t, "Flt*Int"), "mRR");

  auto extended = t.rebuilt(with_int8());
  EXPECT_EQ(bodies(extended.methods()), (std::vector<std::string>{"mII", "mFF", "mUU", "mRR"}));
  EXPECT_EQ(selected(extended, "Flt*Int"), "mUU");
  EXPECT_EQ(selected(extended, "Int8*Int"), "mRR");
}

TEST(DispatchTest, AtomicModeIsStableUnderExtension) {
  auto t = three(Mode::Atomic);
  t.add_method(M("mRR", "Real*Real"));
  EXPECT_EQ(bodies(t.methods()), (std::vector<std::string>{"mII", "mFF", "mUU", "mRR"}));
  EXPECT_EQ(selected(t, "Flt*Int"), "mUU");
  auto extended = t.rebuilt(with_int8());
  EXPECT_EQ(bodies(extended.methods()), bodies(t.methods()));
  EXPECT_EQ(selected(extended, "Flt*Int"), "mUU");
}

TEST(DispatchTest, ReplacementOfIdenticalAndEquivalentSignatures) {
  MethodTable t(builtin(), Mode::Semantic);
  t.add_method(M("first", "Int*Int"));
  t.add_method(M("second", "Int*Int"));
  EXPECT_EQ(bodies(t.methods()), (std::vector<std::string>{"second"}));
  t.add_method(M("dist", "Str*(Int|Flt)"));
  t.add_method(M("fact", "Str*Int|Str*Flt"));
  EXPECT_EQ(bodies(t.methods()), (std::vector<std::string>{"second", "fact"}));
  // Other functions are independent.
  t.add_method(MethodDef{"minus", T("Int*Int"), "sub"});
  EXPECT_EQ(t.methods().size(), 3u);
}

TEST(DispatchTest, NoTwoMethodsAreEquivalent) {
  std::mt19937_64 rng(9);
  for (Mode m : {Mode::Semantic, Mode::Atomic}) {
    MethodTable t(builtin(), m);
    for (int i = 0; i < 200; ++i)
      t.add_method(MethodDef{"f", random_type(rng, builtin(), 3), std::to_string(i)});
    const auto& ms = t.methods();
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        ASSERT_FALSE(equivalent(builtin(), ms[i].signature, ms[j].signature, m));
  }
}

TEST(DispatchTest, AmbiguityReportsCandidates) {
  MethodTable t(builtin(), Mode::Semantic);
  t.add_method(M("left", "Int*Real"));
  t.add_method(M("right", "Real*Int"));
  auto out = t.resolve("plus", T("Int*Int"));
  EXPECT_EQ(out.status, Status::Ambiguous);
  EXPECT_FALSE(out.method);
  EXPECT_EQ(bodies(out.candidates), (std::vector<std::string>{"left", "right"}));
  EXPECT_FALSE(is_subtype(builtin(), T("Int*Real"), T("Real*Int"), Mode::Semantic));
  EXPECT_FALSE(is_subtype(builtin(), T("Real*Int"), T("Int*Real"), Mode::Semantic));
  // A more specific method resolves it.
  t.add_method(M("both", "Int*Int"));
  EXPECT_EQ(selected(t, "Int*Int"), "both");
}

TEST(DispatchTest, AbstractCallTypes) {
  auto sem = three(Mode::Semantic);
  EXPECT_EQ(selected(sem, "Real*Real"), "mUU");
  auto at = three(Mode::Atomic);
  EXPECT_EQ(at.resolve("plus", T("Real*Real")).status, Status::NoApplicableMethod);
}

TEST(DispatchTest, Errors) {
  auto t = three(Mode::Semantic);
  try {
    t.resolve("times", T("Int*Int"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFunction);
  }
  EXPECT_THROW(t.applicable("times", T("Int")), Error);
  EXPECT_THROW(t.add_method(MethodDef{"plus", Type::concrete("Int8"), "x"}), Error);
}

TEST(DispatchTest, ParsesMethodFiles) {
  auto file = parse_method_file(
      "# numeric addition\n"
      "mode atomic\n"
      "\n"
      "method plus Int*Int => mII   # ints\n"
      "method plus (Int|Flt)*(Int|Flt) => mUU\n",
      builtin());
  EXPECT_EQ(file.mode, Mode::Atomic);
  ASSERT_EQ(file.methods.size(), 2u);
  EXPECT_EQ(file.methods[0].function, "plus");
  EXPECT_EQ(file.methods[0].body, "mII");
  EXPECT_EQ(file.methods[1].signature, T("(Int|Flt)*(Int|Flt)"));

  auto table = build_table(file, builtin());
  EXPECT_EQ(table.mode(), Mode::Atomic);
  EXPECT_EQ(selected(table, "Int*Int"), "mII");

  EXPECT_EQ(parse_method_file("method f Int => a\n", builtin()).mode, Mode::Semantic);
}

TEST(DispatchTest, MethodFileErrors) {
  auto code_of = [](std::string_view text) {
    try {
      parse_method_file(text, builtin());
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidTrace;  // sentinel: no error
  };
  EXPECT_EQ(code_of("method plus Int*Int mII\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("method plus Int*Int =>\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("mode fuzzy\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("method f Int => a\nmode atomic\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("function f Int => a\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("method f Int* => a\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("method f Quux => a\n"), ErrorCode::UnknownName);
  try {
    parse_method_file("# c\n\nmethod f Int a\n", builtin());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.position(), std::optional<std::size_t>(3));
  }
}

}  // namespace
}  // namespace tagsub::testing
