// circulant: census, classification, formula tables and verification for
// circulant (di)graphs on Z_n.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 resource ceiling.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "circ/census.hpp"
#include "circ/error.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int run_census_cmd(int order, const std::string& mode_text, int threads, bool override_ceiling,
                   const std::string& out_path, const std::string& csv_dir) {
  circ::CensusOptions options;
  options.threads = threads > 0 ? threads : circ::default_threads();
  options.override_ceiling = override_ceiling;
  const circ::CensusReport report = circ::run_census(order, circ::parse_mode(mode_text), options);
  const std::string json = circ::report_to_json(report);
  if (out_path.empty()) {
    std::cout << json << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << json << '\n';
  }
  if (!csv_dir.empty()) {
    std::filesystem::create_directories(csv_dir);
    const auto path = std::filesystem::path(csv_dir) /
                      ("census_" + circ::to_string(report.mode) + "_" + std::to_string(order) + ".csv");
    std::ofstream csv(path);
    if (!csv) throw std::runtime_error("cannot write " + path.string());
    circ::write_report_csv(report, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census and classification of circulant (di)graphs"};
  app.require_subcommand(1);

  int order = 0;
  std::string mode = "digraph";
  int threads = 0;
  bool override_ceiling = false;
  std::string out_path, csv_dir;
  auto* census = app.add_subcommand("census", "classify every connection set of one order");
  census->add_option("--order", order, "order n of Z_n")->required();
  census->add_option("--mode", mode, "graph or digraph")->check(CLI::IsMember({"graph", "digraph"}));
  census->add_option("--threads", threads, "worker count (default: CENSUS_THREADS or 1)");
  census->add_flag("--override-ceiling", override_ceiling, "run above the default size ceiling");
  census->add_option("--out", out_path, "write the JSON report here instead of stdout");
  census->add_option("--csv", csv_dir, "also write a CSV report into this directory");

  std::string set_text;
  auto* classify = app.add_subcommand("classify", "classify one connection set");
  classify->add_option("--set", set_text, "connection set as n:e1,e2,...")->required();

  int formula_order = 0;
  auto* formulas = app.add_subcommand("formulas", "evaluate every formula for an order");
  formulas->add_option("--order", formula_order, "order n")->required();

  std::vector<int> orders;
  std::string suite = "all";
  bool verify_override = false;
  auto* verify = app.add_subcommand("verify", "run census and construction checks");
  verify->add_option("--orders", orders, "comma-separated orders")->required()->delimiter(',');
  verify->add_option("--suite", suite, "all or fast")->check(CLI::IsMember({"all", "fast"}));
  verify->add_flag("--override-ceiling", verify_override, "allow orders above the ceilings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*census) {
      return run_census_cmd(order, mode, threads, override_ceiling, out_path, csv_dir);
    }
    if (*classify) {
      const auto s = circ::ConnectionSet::parse(set_text);
      std::cout << circ::classification_to_json(circ::classify(s)) << '\n';
      return 0;
    }
    if (*formulas) {
      std::cout << circ::formulas_to_json(formula_order, circ::formulas(formula_order)) << '\n';
      return 0;
    }
    if (*verify) {
      circ::CensusOptions options;
      options.threads = circ::default_threads();
      options.override_ceiling = verify_override;
      const auto result = circ::verify(orders, circ::parse_suite(suite), options);
      circ::print_verify(result, std::cout);
      return result.passed() ? 0 : kExitVerifyFailed;
    }
  } catch (const circ::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const circ::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const circ::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}
