// lattice3: invariants, classification and catalog of lattice 3-polytopes.

#include "lattice3/report.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace lattice3;

namespace {

enum Exit { kOk = 0, kUsage = 2, kVerifyFailed = 3, kContradiction = 4 };

int cmd_generate(const std::string& tag_text, const std::vector<long>& params) {
  const auto tag = parse_tag(tag_text);
  if (!tag) {
    std::cerr << "error: unknown tag " << tag_text << "\n";
    return kUsage;
  }
  const CatalogEntry entry{*tag, params};
  std::cout << render_document(generate_document(entry));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and classification of lattice 3-polytopes"};
  app.require_subcommand(1);

  ReportOptions opt;
  std::string file;

  auto* analyze = app.add_subcommand("analyze", "Invariants of a polytope");
  analyze->add_option("file", file, "JSON polytope document")->required();
  analyze->add_flag("--json", opt.json, "Machine-readable output");
  analyze->add_flag("--timing", opt.timing, "Report elapsed time");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a polytope");
  classify_cmd->add_option("file", file, "JSON polytope document")->required();
  classify_cmd->add_flag("--json", opt.json, "Machine-readable output");
  classify_cmd->add_flag("--timing", opt.timing, "Report elapsed time");

  std::string tag;
  std::vector<long> params;
  auto* generate = app.add_subcommand("generate", "Print a catalog polytope");
  generate->add_option("tag", tag, "T, F1..F4, E55, E63, E72, E821, E822, "
                                   "E823, E511 or E512")
      ->required();
  generate->add_option("params", params, "Integer parameters");
  generate->allow_extras(false);

  std::string suite;
  std::size_t nmax = 12;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "tables, partition, spanning, hstar, "
                                     "dim4 or classification")
      ->required();
  verify->add_option("nmax,--nmax", nmax, "Largest size to enumerate")
      ->check(CLI::Range(5, 40));
  verify->add_flag("--json", verify_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) {
      std::cout << analyze_report(read_document(file), opt);
      return kOk;
    }
    if (*classify_cmd) {
      Verdict verdict;
      std::cout << classify_report(read_document(file), verdict, opt);
      return std::holds_alternative<ContradictsClassification>(verdict)
                 ? kContradiction
                 : kOk;
    }
    if (*generate) return cmd_generate(tag, params);
    if (*verify) {
      const SuiteReport r = run_suite(suite, nmax);
      std::cout << render_suite(r, verify_json);
      return r.ok() ? kOk : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionDeficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
