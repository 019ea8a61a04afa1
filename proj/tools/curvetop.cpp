// curvetop: topology of a real plane algebraic curve f(x, y) = 0.
//
//   curvetop analyze --expr "x^2 + y^2 - 1"
//   curvetop analyze --input curve.txt --format dot --verify

#include "curvetop/emit.hpp"
#include "curvetop/errors.hpp"
#include "curvetop/parse.hpp"
#include "curvetop/topology.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kInvalid = 3, kViolation = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace curvetop;

  CLI::App app{"Topology of real plane algebraic curves"};
  app.require_subcommand(1);
  CLI::App* analyze = app.add_subcommand("analyze", "Compute a graph isotopic to V(f)");

  std::string input_path, expr;
  std::string shear = "deterministic";
  std::uint64_t seed = 0;
  std::string format = "json";
  bool verify = false, trace = false, serial = false;

  auto* in_opt = analyze->add_option("--input", input_path, "File containing the polynomial");
  auto* ex_opt = analyze->add_option("--expr", expr, "Polynomial text, e.g. \"y^2 - x^3\"");
  in_opt->excludes(ex_opt);
  ex_opt->excludes(in_opt);
  analyze->add_option("--shear", shear, "Shear search")
      ->check(CLI::IsMember({"deterministic", "random", "none"}));
  analyze->add_option("--seed", seed, "Seed for --shear random");
  analyze->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "svg"}));
  analyze->add_flag("--verify", verify, "Check structural invariants of the result");
  analyze->add_flag("--trace", trace, "Include the analysis trace");
  analyze->add_flag("--serial", serial, "Disable the parallel per-fiber loops");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (input_path.empty() && expr.empty()) {
    std::cerr << "error: one of --input or --expr is required\n";
    return kUsage;
  }

  std::string text;
  try {
    text = input_path.empty() ? expr : read_file(input_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  BiPoly F;
  try {
    F = parse_poly(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  }

  static const std::map<std::string, ShearMode> modes = {
      {"deterministic", ShearMode::deterministic},
      {"random", ShearMode::random},
      {"none", ShearMode::none}};
  static const std::map<std::string, OutputFormat> formats = {
      {"json", OutputFormat::json}, {"dot", OutputFormat::dot}, {"svg", OutputFormat::svg}};

  TopologyOptions opt;
  opt.shear_mode = modes.at(shear);
  opt.seed = seed;
  opt.parallel = !serial;
  opt.plot_samples = format == "svg";

  TopologyResult result;
  try {
    result = compute_topology(F, opt);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }

  const OutputFormat fmt = formats.at(format);
  std::cout << emit(result, fmt, trace);
  if (trace && fmt != OutputFormat::json) std::cerr << emit_trace_json(result.trace);

  if (verify) {
    const auto violations = verify_graph(result.graph);
    for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
    if (!violations.empty()) return kViolation;
  }
  return kOk;
}
