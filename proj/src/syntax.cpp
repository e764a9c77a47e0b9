#include "tagsub/syntax.hpp"

#include "tagsub/error.hpp"

namespace tagsub {

namespace {

constexpr std::string_view kTimes = "\xC3\x97";  // U+00D7
constexpr std::string_view kCup = "\xE2\x88\xAA";  // U+222A

enum class Tok { Name, Star, Bar, LParen, RParen, End };

class Parser {
 public:
  Parser(std::string_view src, const NominalHierarchy& h) : src_(src), h_(h) { advance(); }

  Type parse() {
    Type t = parse_union();
    if (tok_ != Tok::End) fail("unexpected input");
    return t;
  }

 private:
  Type parse_union() {
    Type t = parse_prod();
    while (tok_ == Tok::Bar) {
      advance();
      t = Type::union_of(std::move(t), parse_prod());
    }
    return t;
  }

  Type parse_prod() {
    Type t = parse_primary();
    while (tok_ == Tok::Star) {
      advance();
      t = Type::pair(std::move(t), parse_primary());
    }
    return t;
  }

  Type parse_primary() {
    if (tok_ == Tok::Name) {
      auto n = h_.find(text_);
      if (!n) {
        throw Error(ErrorCode::UnknownName,
                    "undeclared name '" + std::string(text_) + "' at offset " +
                        std::to_string(start_),
                    start_);
      }
      advance();
      return Type::name(*n);
    }
    if (tok_ == Tok::LParen) {
      advance();
      Type t = parse_union();
      if (tok_ != Tok::RParen) fail("expected ')'");
      advance();
      return t;
    }
    fail(tok_ == Tok::End ? "unexpected end of input" : "expected a name or '('");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(start_), start_);
  }

  static bool name_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
  static bool name_char(char c) {
    return name_start(c) || (c >= '0' && c <= '9') || c == '_';
  }

  void advance() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
      ++pos_;
    start_ = pos_;
    if (pos_ >= src_.size()) {
      tok_ = Tok::End;
      return;
    }
    const std::string_view rest = src_.substr(pos_);
    const char c = src_[pos_];
    if (name_start(c)) {
      std::size_t end = pos_;
      while (end < src_.size() && name_char(src_[end])) ++end;
      text_ = src_.substr(pos_, end - pos_);
      pos_ = end;
      tok_ = Tok::Name;
    } else if (c == '*') {
      ++pos_;
      tok_ = Tok::Star;
    } else if (c == '|') {
      ++pos_;
      tok_ = Tok::Bar;
    } else if (c == '(') {
      ++pos_;
      tok_ = Tok::LParen;
    } else if (c == ')') {
      ++pos_;
      tok_ = Tok::RParen;
    } else if (rest.starts_with(kTimes)) {
      pos_ += kTimes.size();
      tok_ = Tok::Star;
    } else if (rest.starts_with(kCup)) {
      pos_ += kCup.size();
      tok_ = Tok::Bar;
    } else {
      fail("unexpected character");
    }
  }

  std::string_view src_;
  const NominalHierarchy& h_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  Tok tok_ = Tok::End;
  std::string_view text_;
};

void print(const Type& t, bool grouped, std::string& out);

void print_wrapped(const Type& t, bool wrap, bool grouped, std::string& out) {
  if (wrap) out += '(';
  print(t, grouped, out);
  if (wrap) out += ')';
}

void print(const Type& t, bool grouped, std::string& out) {
  switch (t.kind()) {
    case Type::Kind::Name:
      out += t.nominal().text;
      return;
    case Type::Kind::Pair:
      print_wrapped(t.left(), t.left().is_union(), grouped, out);
      out += '*';
      print_wrapped(t.right(), !t.right().is_name(), grouped, out);
      return;
    case Type::Kind::Union:
      print_wrapped(t.left(), grouped && t.left().is_union(), grouped, out);
      out += '|';
      print_wrapped(t.right(), t.right().is_union(), grouped, out);
      return;
  }
}

}  // namespace

Type parse_type(std::string_view src, const NominalHierarchy& h) {
  return Parser(src, h).parse();
}

std::string print_type(const Type& t) {
  std::string out;
  print(t, false, out);
  return out;
}

std::string print_type_grouped(const Type& t) {
  std::string out;
  print(t, true, out);
  return out;
}

}  // namespace tagsub
