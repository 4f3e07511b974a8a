#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfq/error.hpp"
#include "hopfq/graded.hpp"
#include "hopfq/group_cohomology.hpp"
#include "hopfq/heis_torus.hpp"
#include "hopfq/hopf_verify.hpp"
#include "hopfq/io.hpp"
#include "hopfq/suites.hpp"

using namespace hopfq;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

void print_report(const Report& r, bool verbose) {
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    const bool bad = c.status != Status::Pass;
    failed += bad ? 1 : 0;
    if (!bad && !verbose) continue;
    std::cout << "  " << to_string(c.status) << "  " << c.id << "  cases=" << c.cases
              << " residual=" << c.residual_terms;
    if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
    std::cout << "\n";
  }
  std::cout << r.name << ": " << (failed == 0 ? "pass" : "FAIL") << ", " << r.checks.size() << " checks, " << failed
            << " failed";
  if (r.seed != 0) std::cout << " (seed " << r.seed << ")";
  std::cout << "\n";
}

int describe_hopf(const std::string& text, bool verbose) {
  const PresentationFile p = parse_presentation(text);
  const HopfPresentation& h = p.hopf;
  std::cout << "Hopf presentation " << h.name() << ", dim " << h.dim() << ", conductor " << p.conductor
            << ", hbar order " << (p.hbar_order == Series::kFree ? std::string("free") : std::to_string(p.hbar_order))
            << "\n  commutative=" << h.commutative << " cocommutative=" << h.cocommutative
            << " antipode=" << (h.antipode ? "given" : "absent") << "\n";
  Report r = verify_hopf(h);
  r.name = "verify_hopf(" + h.name() + ")";
  print_report(r, verbose);
  return r.passed() ? kPass : kFail;
}

int describe_graded(const std::string& text, bool verbose) {
  const GradedAlgebra a = parse_graded(text);
  std::cout << "Graded algebra " << a.algebra.name << ", dim " << a.algebra.dim() << ", graded by "
            << (a.group ? a.group->name() : "Z (radius " + std::to_string(a.radius) + ")") << "\n";
  for (int g : a.degrees()) std::cout << "  dim A_" << a.degree_label(g) << " = " << a.component(g).size() << "\n";
  const StrongGradingVerdict v = strong_grading(a);
  std::cout << "  strongly graded: " << (v.strong ? "yes" : "no");
  if (v.failing_degree) std::cout << " (no resolution of unity in degree " << a.degree_label(*v.failing_degree) << ")";
  std::cout << "\n";
  if (a.group) {
    const CanonicalMap c = canonical_map(a);
    std::cout << "  canonical map A⊗_B A -> A⊗kG: " << c.dim_balanced << " -> " << c.dim_target << ", rank " << c.rank
              << (c.bijective ? ", bijective" : ", not bijective") << "\n";
  }
  Report r = verify_algebra(a.algebra);
  r.name = "verify_algebra(" + a.algebra.name + ")";
  print_report(r, verbose);
  return r.passed() ? kPass : kFail;
}

int describe_heis(const std::string& text, int order) {
  const HeisElement f = parse_heis(text, order);
  std::cout << "Heisenberg element at hbar order " << order << ": " << f.str() << "\n";
  const auto deg = f.degree();
  std::cout << "  degree " << (deg ? std::to_string(*deg) : std::string("mixed")) << ", valuation " << f.valuation()
            << ", " << f.terms().size() << " terms\n";
  std::cout << "  invariant under (x,y,t) -> (x,y+1,t+x): " << (m3_membership(f) ? "yes" : "no") << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hopf-algebraic identities"};
  app.require_subcommand(1);

  std::string suite;
  SuiteConfig config;
  std::optional<int> order;
  std::string theta;
  std::string json_path;
  bool timing = false;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name, or 'all'")->required();
  verify->add_option("--order", order, "hbar truncation order");
  verify->add_option("--theta", theta, "theta in the scalar grammar");
  verify->add_option("--seed", config.seed, "Seed for sampled cochains")->default_val(kDefaultSeed);
  verify->add_option("--json", json_path, "Write the report as JSON ('-' for stdout)");
  verify->add_flag("--timing", timing, "Record elapsed time in the JSON report");
  verify->add_flag("-v,--verbose", verbose, "List every check");

  std::string file;
  int heis_order = 4;
  auto* describe = app.add_subcommand("describe", "Load a JSON file and verify it");
  describe->add_option("file", file, "Presentation, graded algebra or Heisenberg element")->required();
  describe->add_option("--order", heis_order, "hbar order for Heisenberg elements")->default_val(4);
  describe->add_flag("-v,--verbose", verbose, "List every check");

  std::string csv_path;
  auto* table = app.add_subcommand("octonion-table", "Octonion multiplication table as CSV");
  table->add_option("--csv", csv_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*verify) {
      config.order = order;
      if (verify->count("--theta") > 0) config.theta = theta;
      const Report r = run_suite(suite, config);
      if (json_path == "-") {
        std::cout << dump_report(r, timing);
      } else {
        print_report(r, verbose);
        if (!json_path.empty()) write_file(json_path, dump_report(r, timing));
      }
      return r.passed() ? kPass : kFail;
    }
    if (*describe) {
      const std::string text = read_file(file);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error&) {
        (void)parse_presentation(text);  // reports the position
      }
      if (j.is_array()) return describe_heis(text, heis_order);
      if (j.is_object() && j.contains("degree")) return describe_graded(text, verbose);
      return describe_hopf(text, verbose);
    }
    if (*table) {
      const std::string csv = octonion_csv(fano_octonions());
      if (csv_path.empty()) {
        std::cout << csv;
      } else {
        write_file(csv_path, csv);
      }
      return kPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
