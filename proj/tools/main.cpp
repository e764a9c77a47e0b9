// Command-line front end for the tagsub library.
//
//   tagsub check "Real" "Int|Flt" --mode atomic --trace
//   tagsub nf "Str*(Int|Flt)"
//   tagsub dispatch --methods plus.methods --call "plus Flt*Int"

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tagsub/tagsub.hpp"

namespace {

using namespace tagsub;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;
constexpr int kNoMethod = 3;
constexpr int kAmbiguous = 4;

const std::map<std::string, Mode> kModes{{"semantic", Mode::Semantic}, {"atomic", Mode::Atomic}};
const std::map<std::string, Strategy> kStrategies{
    {"normalize-first", Strategy::NormalizeFirst},
    {"short-path-first", Strategy::ShortPathFirst}};

int verdict(bool b) {
  std::cout << (b ? "true" : "false") << '\n';
  return b ? kTrue : kFalse;
}

std::string join_bodies(const std::vector<MethodDef>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += ", ";
    out += m.body;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tag-based semantic subtyping for nominal types, pairs and unions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string hierarchy_file;
  app.add_option("--hierarchy", hierarchy_file,
                 "Hierarchy file (default: built-in Num/Real/Int/Flt/Cmplx/Str)");

  std::string t1, t2;
  std::string mode_name = "semantic";
  std::string strategy_name = "normalize-first";

  auto* check = app.add_subcommand("check", "Decide t1 <: t2");
  check->add_option("t1", t1)->required();
  check->add_option("t2", t2)->required();
  check->add_option("--mode", mode_name)->check(CLI::IsMember({"semantic", "atomic"}));
  check->add_option("--strategy", strategy_name)
      ->check(CLI::IsMember({"normalize-first", "short-path-first"}));
  bool want_trace = false;
  bool want_derivation = false;
  check->add_flag("--trace", want_trace, "Print the reductive derivation");
  check->add_flag("--derivation", want_derivation, "Print the declarative derivation");

  auto* nf_cmd = app.add_subcommand("nf", "Print the normal form of a type");
  nf_cmd->add_option("t", t1)->required();
  bool atomic_nf = false;
  nf_cmd->add_flag("--atomic", atomic_nf, "Keep abstract names atomic");

  auto* interp_cmd = app.add_subcommand("interp", "Print the tag interpretation of a type");
  interp_cmd->add_option("t", t1)->required();
  interp_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"semantic", "atomic"}));

  auto* match_cmd = app.add_subcommand("match", "Decide whether value type v matches t");
  match_cmd->add_option("v", t1)->required();
  match_cmd->add_option("t", t2)->required();

  auto* eq_cmd = app.add_subcommand("eq", "Decide t1 <: t2 and t2 <: t1");
  eq_cmd->add_option("t1", t1)->required();
  eq_cmd->add_option("t2", t2)->required();
  eq_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"semantic", "atomic"}));

  auto* dispatch_cmd = app.add_subcommand("dispatch", "Resolve a call against a method file");
  std::string methods_file, call;
  dispatch_cmd->add_option("--methods", methods_file)->required();
  dispatch_cmd->add_option("--call", call, "\"<fn> <type-expr>\"")->required();

  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Hierarchy utilities");
  hierarchy_cmd->require_subcommand(1);
  auto* validate_cmd = hierarchy_cmd->add_subcommand("validate", "Validate a hierarchy file");
  std::string validate_file;
  validate_cmd->add_option("--file", validate_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*validate_cmd) {
      const auto h = load_hierarchy(validate_file);
      std::cout << "ok: " << h.size() << " declarations\n";
      return kTrue;
    }

    const NominalHierarchy h =
        hierarchy_file.empty() ? NominalHierarchy::builtin() : load_hierarchy(hierarchy_file);
    const Mode mode = kModes.at(mode_name);

    if (*check) {
      const Type a = parse_type(t1, h);
      const Type b = parse_type(t2, h);
      auto result = reductive_sub(h, a, b, mode, kStrategies.at(strategy_name));
      const int code = verdict(result.holds);
      if (result.holds && want_trace) std::cout << format_trace(*result.trace);
      if (result.holds && want_derivation) {
        std::cout << format_derivation(synthesize(h, *result.trace, mode));
      }
      return code;
    }
    if (*nf_cmd) {
      const Type t = parse_type(t1, h);
      std::cout << print_type_grouped(atomic_nf ? nf_atomic(h, t) : nf(h, t)) << '\n';
      return kTrue;
    }
    if (*interp_cmd) {
      std::cout << format_tagset(interp(h, parse_type(t1, h), mode)) << '\n';
      return kTrue;
    }
    if (*match_cmd) {
      return verdict(matches(h, parse_type(t1, h), parse_type(t2, h)));
    }
    if (*eq_cmd) {
      return verdict(equivalent(h, parse_type(t1, h), parse_type(t2, h), mode));
    }
    if (*dispatch_cmd) {
      const auto table = build_table(load_method_file(methods_file, h), h);
      const auto space = call.find_first_of(" \t");
      if (space == std::string::npos) {
        std::cerr << "error: --call expects \"<fn> <type-expr>\"\n";
        return kError;
      }
      const std::string fn = call.substr(0, space);
      const auto outcome = table.resolve(fn, parse_type(call.substr(space + 1), h));
      switch (outcome.status) {
        case DispatchOutcome::Status::Selected:
          std::cout << "selected: " << outcome.method->body << '\n';
          return kTrue;
        case DispatchOutcome::Status::NoApplicableMethod:
          std::cout << "error: no-method\n";
          return kNoMethod;
        case DispatchOutcome::Status::Ambiguous:
          std::cout << "error: ambiguous [" << join_bodies(outcome.candidates) << "]\n";
          return kAmbiguous;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
