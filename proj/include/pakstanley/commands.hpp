#pragma once

#include <cstdint>
#include <string>

#include "pakstanley/psi.hpp"
#include "pakstanley/spec_file.hpp"

namespace pakstanley {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandResult cmd_report(const ArrangementSpec& spec, bool as_json);

struct VerifyRequest {
  bool battery = false;
  int samples = 20;  // random n=4 (m, eps)-arrangements added to the battery
  std::uint64_t seed = 20240501;
  ZeroRule rule = ZeroRule::rightmost;
  bool as_json = false;
};

// Verifies one arrangement, or the battery when `spec` is null.
CommandResult cmd_verify(const ArrangementSpec* spec, const VerifyRequest& request);

CommandResult cmd_psi(const ArrangementSpec& spec, const std::string& tuple, bool with_region);

// Writes the drawing to `out_path`; "-" prints it instead.
CommandResult cmd_svg(const ArrangementSpec& spec, const std::string& out_path);

CommandResult cmd_interpolate(int n, int m, bool as_json);

// "x3-x2=1" rather than the stored "x2-x3=-1".
std::string positive_form(const Hyperplane& h);

}  // namespace pakstanley
