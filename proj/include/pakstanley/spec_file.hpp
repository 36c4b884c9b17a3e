#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pakstanley/arrangement.hpp"

namespace pakstanley {

class SpecFileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A parsed arrangement file. Two forms are accepted:
//   {"n": 3, "S": {"1,2": [0], "1,3": [0, 1]}}
//   {"m": [1, 0, 3], "eps": {"2,3": 1}}
// plus an optional "name". Absent pairs mean the empty set / eps = 0.
struct ArrangementSpec {
  std::optional<std::string> name;
  Arrangement arrangement;
};

// Syntax errors carry line and column; semantic errors come from the
// arrangement constructors (ArrangementError).
ArrangementSpec parse_arrangement_file(std::string_view text);
ArrangementSpec read_arrangement_file(const std::string& path);

// Canonical form: always the sets form, keys sorted, empty pairs omitted,
// compact, newline-terminated.
std::string serialize_arrangement(const Arrangement& a,
                                  const std::optional<std::string>& name = std::nullopt);

}  // namespace pakstanley
