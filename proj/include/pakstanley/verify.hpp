#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pakstanley/arrangement.hpp"
#include "pakstanley/parking.hpp"
#include "pakstanley/psi.hpp"
#include "pakstanley/region.hpp"
#include "pakstanley/sketch.hpp"

namespace pakstanley {

// Memoises enumerate_sketches per (m, n). Not thread-safe.
class SketchCache {
public:
  const std::vector<Sketch>& get(int m, int n);
  // Position of w in get(w.m(), w.n()).
  std::size_t index_of(const Sketch& w);

private:
  struct Entry {
    std::vector<Sketch> sketches;
    std::unordered_map<Sketch, std::size_t, SketchHash> index;
  };
  Entry& entry(int m, int n);

  std::map<std::pair<int, int>, Entry> cache_;
};

// Everything the invariant checks need about one arrangement.
struct Analysis {
  Arrangement arrangement;
  RegionTable table;
  std::vector<ParkingFunction> parking;
  std::vector<bool> locally_maximal;  // per sketch: in L_S
  std::vector<bool> strictly_maximal; // per sketch: in M_S
  std::vector<bool> psi_image;        // per sketch: in N_S
  std::vector<std::optional<Sketch>> psi_words;  // Psi(parking[k]), empty on failure
  std::vector<std::string> psi_failures;
  LabelingReport report;
  bool transitive = false;
  bool x = false;
  bool y = false;
  std::optional<MEpsData> m_eps;
  std::int64_t determinant = 0;

  std::size_t count(const std::vector<bool>& flags) const;
  bool n_equals_m() const { return psi_image == strictly_maximal; }
  bool m_equals_l() const { return strictly_maximal == locally_maximal; }
};

struct VerifyOptions {
  ZeroRule rule = ZeroRule::rightmost;
};

// Analysis built with the real Psi; `options.rule` only affects which word is
// recorded for each parking function (N_S) and the Psi-based checks.
Analysis analyze(const Arrangement& a, SketchCache& cache, const VerifyOptions& options = {});

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

VerificationReport verify_arrangement(const Arrangement& a, SketchCache& cache,
                                      const VerifyOptions& options = {});

// All n-dimensional arrangements with every S_{i,j} a subset of [lo; hi],
// ordered by hyperplane count and then by subset encoding.
std::vector<Arrangement> exhaustive_battery(int n, int lo, int hi);

// Deterministic pseudo-random (m, eps) data with m_j in [0; max_m].
std::vector<MEpsData> random_m_eps(int n, int count, int max_m, std::uint64_t seed);

struct BatteryFailure {
  Arrangement arrangement;
  CheckResult check;
};

struct BatteryReport {
  std::size_t arrangements = 0;
  // check name -> (passed, failed)
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  std::optional<BatteryFailure> first_failure;
  bool passed() const { return !first_failure; }
};

BatteryReport run_battery(const std::vector<Arrangement>& arrangements,
                          const VerifyOptions& options = {});

// The default battery: every n=3 arrangement with offsets in [-2; 2] plus
// `samples` random n=4 (m, eps)-arrangements with m_j <= 2.
std::vector<Arrangement> default_battery(int samples = 20, std::uint64_t seed = 20240501);

}  // namespace pakstanley
