// softaura: command-line front end for soft aura spaces.
//
// Exit codes: 0 ok, 2 domain violation, 3 parse or schema error, 4 resource cap.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "softaura/softaura.hpp"

namespace {

using namespace softaura;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_domain = 2;
constexpr int exit_schema = 3;
constexpr int exit_cap = 4;

std::size_t default_cap_from_env() {
  if (const char* v = std::getenv("SOFTAURA_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring SOFTAURA_CAP=" << v << "\n";
    }
  }
  return default_cap;
}

int exit_code_for(const Error& e) {
  if (e.is_resource_limit()) return exit_cap;
  if (e.kind() == ErrorKind::InvalidDocument) return exit_schema;
  return exit_domain;
}

ClosureKind parse_closure(const std::string& s) {
  return s == "kuratowski" ? ClosureKind::Kuratowski : ClosureKind::Cech;
}

// A loaded space or the exit code to return.
std::optional<io::LoadedSpace> load_or_report(const std::string& path, std::size_t cap, int& code) {
  auto loaded = io::load_space_file(path, cap);
  if (!loaded.space) {
    for (const auto& v : loaded.violations) std::cerr << v << "\n";
    code = exit_domain;
    return std::nullopt;
  }
  return loaded;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft aura topological spaces: validation, operators, rough approximations"};
  app.require_subcommand(1);

  std::string space_path, target, set_name, closure = "cech", format = "table", map_path, family_path;
  std::size_t cap = default_cap_from_env();

  auto* validate = app.add_subcommand("validate", "check the topology and scope axioms");
  validate->add_option("space", space_path, "space document")->required();

  auto* approx = app.add_subcommand("approx", "rough approximations of a named set");
  approx->add_option("space", space_path, "space document")->required();
  approx->add_option("--target", target, "named set")->required();
  approx->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "generalized-open classes of a named set");
  classify_cmd->add_option("space", space_path, "space document")->required();
  classify_cmd->add_option("--set", set_name, "named set")->required();
  classify_cmd->add_option("--closure", closure, "cech or kuratowski")->check(CLI::IsMember({"cech", "kuratowski"}));

  auto* axioms = app.add_subcommand("axioms", "separation axioms with witnesses");
  axioms->add_option("space", space_path, "space document")->required();
  axioms->add_option("--cap", cap, "enumeration cap");

  auto* continuity = app.add_subcommand("continuity", "continuity profile of a soft mapping");
  continuity->add_option("mapping", map_path, "mapping document")->required();
  continuity->add_option("--closure", closure, "cech or kuratowski")->check(CLI::IsMember({"cech", "kuratowski"}));
  continuity->add_option("--cap", cap, "enumeration cap");

  auto* suite = app.add_subcommand("suite", "run the law suite over a space family");
  suite->add_option("family", family_path, "space family document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_schema;
  }

  try {
    int code = exit_ok;
    if (*validate) {
      auto loaded = load_or_report(space_path, cap, code);
      if (!loaded) return code;
      std::cout << "valid: " << loaded->context->universe_size() << " points, "
                << loaded->context->parameter_count() << " parameters\n";
      return exit_ok;
    }
    if (*approx) {
      auto loaded = load_or_report(space_path, cap, code);
      if (!loaded) return code;
      const auto report = approximate(*loaded->space, loaded->set(target));
      if (format == "json") {
        std::cout << io::dump(io::to_json(report));
      } else {
        std::cout << io::render_table(report);
      }
      return exit_ok;
    }
    if (*classify_cmd) {
      auto loaded = load_or_report(space_path, cap, code);
      if (!loaded) return code;
      std::cout << io::dump(io::to_json(classify(*loaded->space, loaded->set(set_name), parse_closure(closure))));
      return exit_ok;
    }
    if (*axioms) {
      auto loaded = load_or_report(space_path, cap, code);
      if (!loaded) return code;
      std::cout << io::dump(io::to_json(separation_report(*loaded->space, cap), *loaded->context));
      return exit_ok;
    }
    if (*continuity) {
      const auto mapping = io::load_mapping_file(map_path, cap);
      std::cout << io::dump(io::to_json(continuity_profile(mapping, parse_closure(closure), cap)));
      return exit_ok;
    }
    if (*suite) {
      json j;
      try {
        j = json::parse(io::read_file(family_path));
      } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidDocument, std::string("parse error: ") + e.what());
      }
      const auto report = harness::run_law_suite(io::family_spec_from_json(j));
      std::cout << io::dump(io::to_json(report));
      return report.total_failures() == 0 ? exit_ok : exit_domain;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  return exit_ok;
}
