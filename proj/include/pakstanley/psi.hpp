#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pakstanley/arrangement.hpp"
#include "pakstanley/parking.hpp"
#include "pakstanley/region.hpp"
#include "pakstanley/sketch.hpp"

namespace pakstanley {

// Phi(w): p_i = #{(j, s) : s in S+_{i,j}, alpha_j^s <_w alpha_i^0}.
ParkingFunction phi(const Arrangement& a, const Sketch& w);

// Snapshot of the Psi state machine before step `step` (1-based).
struct PsiState {
  int step = 0;
  std::vector<int> tuple;               // P_r
  std::vector<int> queue;               // O_r, front first
  std::vector<Letter> emitted;          // w_1 ... w_{r-1}
  std::optional<Letter> letter;         // w_r; empty for the terminal state
};

// Which zero entry Case 1 emits. Only `rightmost` is Psi; `leftmost` exists
// so that verification can be run against a deliberately broken rule.
enum class ZeroRule { rightmost, leftmost };

class NotParkingError : public ParkingError {
public:
  NotParkingError(const std::string& what, std::vector<bool> burned)
      : ParkingError(what), burned_(std::move(burned)) {}
  const std::vector<bool>& burned() const { return burned_; }

private:
  std::vector<bool> burned_;
};

// Full trace, ending with the terminal state. Throws NotParkingError when p is
// not a D_S-parking function.
std::vector<PsiState> psi_trace(const Arrangement& a, const ParkingFunction& p,
                                ZeroRule rule = ZeroRule::rightmost);

// The emitted word as a validated sketch.
Sketch psi(const Arrangement& a, const ParkingFunction& p, ZeroRule rule = ZeroRule::rightmost);

// beta_S(Psi(p)), a region labelled p.
Region inverse_region(const Arrangement& a, const ParkingFunction& p);

// Table with columns r, P_r, O_r, w_r followed by the resulting sketch.
std::string format_trace(const std::vector<PsiState>& trace);

}  // namespace pakstanley
