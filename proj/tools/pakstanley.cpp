#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pakstanley/commands.hpp"

using namespace pakstanley;

namespace {

int emit(const CommandResult& result) {
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pak-Stanley labelings of deformed braid arrangements"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* report = app.add_subcommand("report", "Regions, labels and bijectivity criteria");
  report->add_option("file", file, "Arrangement file (JSON)")->required();
  report->add_flag("--json", as_json, "Print JSON");

  VerifyRequest request;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Check every invariant on a file or the battery");
  verify->add_option("file", file, "Arrangement file (JSON)");
  verify->add_flag("--battery", request.battery, "Run the exhaustive battery");
  verify->add_option("--samples", request.samples, "Random n=4 (m,eps) samples in the battery")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", request.seed, "Seed for the random samples");
  verify->add_flag("--inject-fault", inject_fault,
                   "Emit the leftmost zero in Psi instead of the rightmost (negative control)");
  verify->add_flag("--json", request.as_json, "Print JSON");

  std::string tuple;
  bool with_region = false;
  auto* psi = app.add_subcommand("psi", "Trace Psi on a parking function");
  psi->add_option("file", file, "Arrangement file (JSON)")->required();
  psi->add_option("p", tuple, "Parking function, e.g. 1,0,1")->required();
  psi->add_flag("--region", with_region, "Also print the region Psi selects and its label");

  std::string out_path = "-";
  auto* svg = app.add_subcommand("svg", "Draw a 3-dimensional arrangement with its labels");
  svg->add_option("file", file, "Arrangement file (JSON)")->required();
  svg->add_option("--out", out_path, "Output path, '-' for stdout");

  int n = 3;
  int m = 1;
  auto* interpolate = app.add_subcommand("interpolate", "Walk from the (m-1)- to the m-Catalan arrangement");
  interpolate->add_option("n", n, "Dimension")->required();
  interpolate->add_option("m", m, "Level")->required();
  interpolate->add_flag("--json", as_json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*interpolate) return emit(cmd_interpolate(n, m, as_json));

    std::optional<ArrangementSpec> spec;
    if (!file.empty()) spec = read_arrangement_file(file);

    if (*report) return emit(cmd_report(*spec, as_json));
    if (*verify) {
      if (inject_fault) request.rule = ZeroRule::leftmost;
      if (request.battery && spec) {
        std::cerr << "verify: give either a file or --battery, not both\n";
        return 2;
      }
      return emit(cmd_verify(spec ? &*spec : nullptr, request));
    }
    if (*psi) return emit(cmd_psi(*spec, tuple, with_region));
    if (*svg) return emit(cmd_svg(*spec, out_path));
  } catch (const SpecFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ArrangementError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
