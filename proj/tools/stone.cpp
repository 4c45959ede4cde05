// stone: condition reports, spectrum export and conformance sweeps.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stone/error.hpp"
#include "stone/fuzz.hpp"
#include "stone/report.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kAssertion = 2;

struct InputFailure {
  std::string message;
};

stone::Instance load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFailure{path + ": cannot open file"};
  std::stringstream buf;
  buf << in.rdbuf();
  stone::ParsedText parsed;
  try {
    parsed = stone::parse_with_lines(buf.str());
  } catch (const stone::DocumentError& e) {
    throw InputFailure{path + ":" + std::to_string(e.line()) + ": " + e.what()};
  }
  try {
    return stone::load_instance(parsed.doc);
  } catch (const stone::DocumentError& e) {
    auto where = e.pointer().empty() ? std::string("/") : e.pointer();
    throw InputFailure{path + ":" + std::to_string(stone::line_of(parsed, e.pointer())) + ": at " + where + ": " +
                       e.what()};
  } catch (const stone::Error& e) {
    throw InputFailure{path + ": " + e.what()};
  }
}

int run_analyze(const std::string& path, bool json) {
  auto report = stone::analyze_report(load(path));
  if (json) std::cout << report.dump(2) << '\n';
  else std::cout << stone::report_text(report);
  return 0;
}

int run_spectrum(const std::string& path, const std::string& out) {
  auto dot = stone::spectrum_dot(load(path));
  if (out == "-") {
    std::cout << dot;
    return 0;
  }
  std::ofstream f(out);
  if (!f) throw InputFailure{out + ": cannot write file"};
  f << dot;
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, std::uint64_t budget, bool assert_clean) {
  auto report = stone::sweep_theorem(suite, budget, seed);
  std::cout << report.to_json().dump(2) << '\n';
  if (assert_clean) {
    try {
      stone::enforce(report);
    } catch (const stone::SweepFailed& e) {
      std::cerr << "counterexample: " << e.counterexample() << '\n';
      return kAssertion;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois-connection spectra of finite lattices"};
  app.require_subcommand(1);

  std::string path, dot_out, suite;
  bool json = false, assert_clean = false;
  std::uint64_t seed = 0, budget = 1000;

  auto* analyze = app.add_subcommand("analyze", "print the condition report of an instance document");
  analyze->add_option("file", path, "instance document")->required();
  analyze->add_flag("--json", json, "machine-readable output");

  auto* spectrum = app.add_subcommand("spectrum", "export prime spectra and the quasi-orbit space as DOT");
  spectrum->add_option("file", path, "instance document")->required();
  spectrum->add_option("--dot", dot_out, "output file, - for stdout")->required();

  auto* verify = app.add_subcommand("verify", "run a conformance sweep");
  verify->add_option("--suite", suite, "suite tag")->required()->check(CLI::IsMember(stone::sweep_tags()));
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--budget", budget, "instance count for random suites");
  verify->add_flag("--assert", assert_clean, "exit 2 on any violation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (analyze->parsed()) return run_analyze(path, json);
    if (spectrum->parsed()) return run_spectrum(path, dot_out);
    return run_verify(suite, seed, budget, assert_clean);
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return kInputError;
  } catch (const stone::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
