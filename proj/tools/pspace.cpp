// pspace: enumerate finite T0 spaces, build powerspace expressions over them
// and run the verification suites.
//
// Exit codes: 0 pass, 1 a check failed, 2 a resource cap was hit, 3 bad input.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "powerspace/errors.hpp"
#include "powerspace/expression.hpp"
#include "powerspace/space_io.hpp"
#include "powerspace/suites.hpp"

using namespace powerspace;

namespace {

constexpr int kExitInput = 3;

// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct VerifyArgs {
  std::string suite = "all";
  std::size_t max_points = 3;
  std::size_t cap = std::size_t{1} << 20;
  std::size_t family_cap = std::size_t{1} << 16;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool include_empty = false;
  bool allow_large = false;
  std::string format = "text";
  std::string out;
  bool timings = false;
};

struct BuildArgs {
  std::string space;
  std::string expr = "X";
  std::string format = "json";
  std::string out;
  std::size_t cap = std::size_t{1} << 20;
};

struct EnumerateArgs {
  std::size_t n = 3;
  bool include_empty = false;
  bool labeled = false;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  auto suite = parse_suite(a.suite);
  if (!suite) throw Error(ErrorCode::InvalidInput, "unknown suite '" + a.suite + "'");
  SuiteOptions o;
  o.max_points = a.max_points;
  o.include_empty = a.include_empty;
  o.jobs = a.jobs;
  o.seed = a.seed;
  o.family_cap = a.family_cap;
  o.limits.max_points = a.cap;
  o.allow_large_distributive = a.allow_large;
  SuiteReport report = run_suite(*suite, o);
  Sink sink(a.out);
  if (a.format == "json")
    sink.out() << report.to_json(a.timings).dump(2) << "\n";
  else
    sink.out() << report.to_text(a.timings);
  return report.exit_code();
}

int run_build(const BuildArgs& a) {
  Expression e = parse_expression(a.expr);
  SpaceRef X = make_ref(load_space(a.space));
  Limits limits;
  limits.max_points = a.cap;
  Built b = evaluate(e, X, limits);
  Sink sink(a.out);
  if (a.format == "dot") {
    write_dot(sink.out(), built_space(b), "space");
  } else {
    json j;
    if (auto* c = std::get_if<ConstructedRef>(&b))
      j = constructed_to_json(**c);
    else
      j = space_to_json(*X);
    j["expression"] = e.to_string();
    sink.out() << j.dump() << "\n";
  }
  std::cerr << e.to_string() << ": " << built_space(b).size() << " points\n";
  return 0;
}

int run_enumerate(const EnumerateArgs& a) {
  auto spaces = enumerate_spaces(a.n, !a.labeled, a.include_empty);
  Sink sink(a.out);
  for (const auto& s : spaces) sink.out() << space_to_json(s).dump() << "\n";
  std::cerr << spaces.size() << " spaces\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite powerspace constructions and their verification suites"};
  app.set_config("--config", "", "INI or TOML file with option defaults; command-line flags take precedence");
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over all small T0 spaces");
  verify->add_option("--suite", va.suite, "all|homeo|monad|consonance|pi02|wilker|naturality|counterexamples")
      ->capture_default_str();
  verify->add_option("--max-points", va.max_points, "Largest space size enumerated")->capture_default_str();
  verify->add_option("--cap", va.cap, "Largest constructed space, in points")->capture_default_str();
  verify->add_option("--family-cap", va.family_cap, "Exhaustive Scott-open family limit before sampling")
      ->capture_default_str();
  verify->add_option("--jobs", va.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Seed for sampled checks")->capture_default_str();
  verify->add_flag("--include-empty", va.include_empty, "Include the empty space");
  verify->add_flag("--allow-large", va.allow_large, "Run distributive-law diagrams beyond two points");
  verify->add_option("--format", va.format, "text|json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--out", va.out, "Report file (default stdout)");
  verify->add_flag("--timings", va.timings, "Append per-check wall-clock times");

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "Build a powerspace expression over a space file");
  build->add_option("--space", ba.space, "Space JSON file")->required()->check(CLI::ExistingFile);
  build->add_option("--expr", ba.expr, "Expression such as K(A(X))")->capture_default_str();
  build->add_option("--format", ba.format, "json|dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  build->add_option("--out", ba.out, "Output file (default stdout)");
  build->add_option("--cap", ba.cap, "Largest constructed space, in points")->capture_default_str();

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Write T0 spaces on at most n points as JSON lines");
  enumerate->add_option("-n", ea.n, "Largest size")->capture_default_str();
  enumerate->add_flag("--include-empty", ea.include_empty, "Include the empty space");
  enumerate->add_flag("--labeled", ea.labeled, "All labelings instead of one per isomorphism class");
  enumerate->add_option("--out", ea.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*verify) return run_verify(va);
    if (*build) return run_build(ba);
    if (*enumerate) return run_enumerate(ea);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_resource_limit() ? 2 : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
