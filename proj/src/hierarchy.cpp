#include "tagsub/hierarchy.hpp"

#include <fstream>
#include <sstream>

#include "tagsub/error.hpp"

namespace tagsub {

namespace {

constexpr std::string_view kBuiltin =
    "# Numeric tower with a separate string type.\n"
    "abstract Num\n"
    "abstract Real <: Num\n"
    "concrete Int <: Real\n"
    "concrete Flt <: Real\n"
    "concrete Cmplx <: Num\n"
    "concrete Str\n";

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_alpha(s.front())) return false;
  for (char c : s) {
    if (!is_alpha(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

NominalHierarchy NominalHierarchy::validate(std::vector<Declaration> decls) {
  NominalHierarchy h;
  for (std::size_t i = 0; i < decls.size(); ++i) {
    const Declaration& d = decls[i];
    if (!is_identifier(d.name)) {
      throw Error(ErrorCode::SyntaxError, "invalid name '" + d.name + "'");
    }
    auto [it, inserted] = h.index_.emplace(d.name, i);
    if (!inserted) {
      const Declaration& prev = decls[it->second];
      if (prev.parent && d.parent && *prev.parent != *d.parent) {
        throw Error(ErrorCode::MultipleParents,
                    "'" + d.name + "' extends both '" + *prev.parent +
                        "' and '" + *d.parent + "'");
      }
      throw Error(ErrorCode::DuplicateName, "'" + d.name + "' declared twice");
    }
  }

  const std::size_t n = decls.size();
  std::vector<std::optional<std::size_t>> parent(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Declaration& d = decls[i];
    if (!d.parent) continue;
    auto it = h.index_.find(*d.parent);
    if (it == h.index_.end()) {
      throw Error(ErrorCode::UnknownParent,
                  "'" + d.name + "' extends undeclared '" + *d.parent + "'");
    }
    if (decls[it->second].kind == NameKind::Concrete) {
      throw Error(ErrorCode::ConcreteParent,
                  "'" + d.name + "' extends concrete '" + *d.parent + "'");
    }
    parent[i] = it->second;
  }

  h.reaches_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t cur = i;
    std::size_t steps = 0;
    while (true) {
      h.reaches_[i * n + cur] = true;
      if (!parent[cur]) break;
      cur = *parent[cur];
      if (cur == i || ++steps > n) {
        throw Error(ErrorCode::CycleDetected,
                    "'" + decls[i].name + "' is its own ancestor");
      }
    }
  }

  h.decls_ = std::move(decls);
  return h;
}

const NominalHierarchy& NominalHierarchy::builtin() {
  static const NominalHierarchy h = parse_hierarchy(kBuiltin);
  return h;
}

bool NominalHierarchy::contains(std::string_view text) const {
  return index_.find(std::string(text)) != index_.end();
}

std::optional<NominalName> NominalHierarchy::find(std::string_view text) const {
  auto it = index_.find(std::string(text));
  if (it == index_.end()) return std::nullopt;
  const Declaration& d = decls_[it->second];
  return NominalName{d.name, d.kind};
}

NominalName NominalHierarchy::lookup(std::string_view text) const {
  if (auto n = find(text)) return *n;
  throw Error(ErrorCode::UnknownName, "undeclared name '" + std::string(text) + "'");
}

std::vector<NominalName> NominalHierarchy::names() const {
  std::vector<NominalName> out;
  for (const auto& d : decls_) out.push_back({d.name, d.kind});
  return out;
}

std::vector<NominalName> NominalHierarchy::concrete_names() const {
  std::vector<NominalName> out;
  for (const auto& d : decls_)
    if (d.kind == NameKind::Concrete) out.push_back({d.name, d.kind});
  return out;
}

std::vector<NominalName> NominalHierarchy::abstract_names() const {
  std::vector<NominalName> out;
  for (const auto& d : decls_)
    if (d.kind == NameKind::Abstract) out.push_back({d.name, d.kind});
  return out;
}

std::size_t NominalHierarchy::index_of(const NominalName& n) const {
  auto it = index_.find(n.text);
  if (it == index_.end() || decls_[it->second].kind != n.kind) {
    throw Error(ErrorCode::UnknownName, "undeclared name '" + n.text + "'");
  }
  return it->second;
}

bool NominalHierarchy::nominal_subtype(const NominalName& sub,
                                       const NominalName& super) const {
  const std::size_t i = index_of(sub);
  const std::size_t j = index_of(super);
  return reaches_[i * decls_.size() + j];
}

std::vector<NominalName> NominalHierarchy::concrete_descendants(
    const NominalName& n) const {
  const std::size_t j = index_of(n);
  std::vector<NominalName> out;
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    if (decls_[i].kind == NameKind::Concrete && reaches_[i * decls_.size() + j])
      out.push_back({decls_[i].name, decls_[i].kind});
  }
  return out;
}

std::vector<NominalName> NominalHierarchy::abstract_descendants(
    const NominalName& n) const {
  const std::size_t j = index_of(n);
  std::vector<NominalName> out;
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    if (decls_[i].kind == NameKind::Abstract && reaches_[i * decls_.size() + j])
      out.push_back({decls_[i].name, decls_[i].kind});
  }
  return out;
}

NominalHierarchy NominalHierarchy::extended(Declaration d) const {
  auto decls = decls_;
  decls.push_back(std::move(d));
  return validate(std::move(decls));
}

NominalHierarchy parse_hierarchy(std::string_view text) {
  std::vector<Declaration> decls;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;

    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(line_no) + ": " + why, line_no);
    };
    Declaration d;
    if (words[0] == "abstract") {
      d.kind = NameKind::Abstract;
    } else if (words[0] == "concrete") {
      d.kind = NameKind::Concrete;
    } else {
      fail("expected 'abstract' or 'concrete', got '" + std::string(words[0]) + "'");
    }
    if (words.size() != 2 && words.size() != 4) fail("expected '<kind> <Name> [<: <Parent>]'");
    if (!is_identifier(words[1])) fail("invalid name '" + std::string(words[1]) + "'");
    d.name = std::string(words[1]);
    if (words.size() == 4) {
      if (words[2] != "<:") fail("expected '<:'");
      if (!is_identifier(words[3])) fail("invalid name '" + std::string(words[3]) + "'");
      d.parent = std::string(words[3]);
    }
    decls.push_back(std::move(d));
  }
  return NominalHierarchy::validate(std::move(decls));
}

NominalHierarchy load_hierarchy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hierarchy file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hierarchy(buf.str());
}

std::string format_hierarchy(const NominalHierarchy& h) {
  std::string out;
  for (const auto& d : h.declarations()) {
    out += d.kind == NameKind::Abstract ? "abstract " : "concrete ";
    out += d.name;
    if (d.parent) out += " <: " + *d.parent;
    out += '\n';
  }
  return out;
}

std::string_view builtin_hierarchy_text() { return kBuiltin; }

void require_well_formed(const NominalHierarchy& h, const Type& t) {
  if (t.is_name()) {
    if (h.find(t.nominal().text) != t.nominal()) {
      throw Error(ErrorCode::UnknownName, "undeclared name '" + t.nominal().text + "'");
    }
    return;
  }
  require_well_formed(h, t.left());
  require_well_formed(h, t.right());
}

}  // namespace tagsub
