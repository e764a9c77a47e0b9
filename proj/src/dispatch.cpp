#include "tagsub/dispatch.hpp"

#include <fstream>
#include <sstream>

#include "tagsub/error.hpp"
#include "tagsub/reductive.hpp"
#include "tagsub/syntax.hpp"

namespace tagsub {

MethodTable::MethodTable(NominalHierarchy h, Mode m) : hierarchy_(std::move(h)), mode_(m) {}

void MethodTable::add_method(MethodDef m) {
  require_well_formed(hierarchy_, m.signature);
  program_.push_back(m);
  for (auto& existing : methods_) {
    if (existing.function == m.function &&
        equivalent(hierarchy_, existing.signature, m.signature, mode_)) {
      existing = std::move(m);
      return;
    }
  }
  methods_.push_back(std::move(m));
}

bool MethodTable::has_function(std::string_view function) const {
  for (const auto& m : methods_)
    if (m.function == function) return true;
  return false;
}

std::vector<MethodDef> MethodTable::applicable(std::string_view function,
                                               const Type& call) const {
  if (!has_function(function)) {
    throw Error(ErrorCode::UnknownFunction, "no methods for '" + std::string(function) + "'");
  }
  require_well_formed(hierarchy_, call);
  std::vector<MethodDef> out;
  for (const auto& m : methods_) {
    if (m.function == function && is_subtype(hierarchy_, call, m.signature, mode_))
      out.push_back(m);
  }
  return out;
}

DispatchOutcome MethodTable::resolve(std::string_view function, const Type& call) const {
  auto apps = applicable(function, call);
  DispatchOutcome outcome;
  if (apps.empty()) return outcome;

  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < apps.size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < apps.size() && below_all; ++j) {
      if (i != j && !is_subtype(hierarchy_, apps[i].signature, apps[j].signature, mode_))
        below_all = false;
    }
    if (below_all) minimal.push_back(i);
  }
  if (minimal.size() == 1) {
    outcome.status = DispatchOutcome::Status::Selected;
    outcome.method = apps[minimal.front()];
  } else {
    outcome.status = DispatchOutcome::Status::Ambiguous;
    outcome.candidates = std::move(apps);
  }
  return outcome;
}

MethodTable MethodTable::rebuilt(NominalHierarchy h) const {
  MethodTable t(std::move(h), mode_);
  for (const auto& m : program_) t.add_method(m);
  return t;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view next_word(std::string_view& s) {
  s = trim(s);
  std::size_t end = 0;
  while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
  std::string_view w = s.substr(0, end);
  s.remove_prefix(end);
  return w;
}

}  // namespace

MethodFile parse_method_file(std::string_view text, const NominalHierarchy& h) {
  MethodFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + why, line_no);
    };
    std::string_view rest = line;
    std::string_view keyword = next_word(rest);
    if (keyword == "mode") {
      if (!file.methods.empty()) fail("'mode' must precede all methods");
      std::string_view m = next_word(rest);
      if (!trim(rest).empty()) fail("trailing input after mode");
      if (m == "semantic") {
        file.mode = Mode::Semantic;
      } else if (m == "atomic") {
        file.mode = Mode::Atomic;
      } else {
        fail("unknown mode '" + std::string(m) + "'");
      }
    } else if (keyword == "method") {
      std::string_view fn = next_word(rest);
      if (!is_identifier(fn)) fail("invalid function name '" + std::string(fn) + "'");
      auto arrow = rest.rfind("=>");
      if (arrow == std::string_view::npos) fail("expected '=>'");
      std::string_view sig = trim(rest.substr(0, arrow));
      std::string_view body = trim(rest.substr(arrow + 2));
      if (body.empty() || body.find_first_of(" \t") != std::string_view::npos)
        fail("expected a single body label after '=>'");
      Type signature = [&] {
        try {
          return parse_type(sig, h);
        } catch (const Error& e) {
          throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
      }();
      file.methods.push_back(MethodDef{std::string(fn), std::move(signature), std::string(body)});
    } else {
      fail("expected 'mode' or 'method'");
    }
  }
  return file;
}

MethodFile load_method_file(const std::string& path, const NominalHierarchy& h) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open method file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_method_file(buf.str(), h);
}

MethodTable build_table(const MethodFile& file, const NominalHierarchy& h) {
  MethodTable t(h, file.mode);
  for (const auto& m : file.methods) t.add_method(m);
  return t;
}

}  // namespace tagsub
