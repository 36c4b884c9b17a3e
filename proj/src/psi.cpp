#include "pakstanley/psi.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace pakstanley {

ParkingFunction phi(const Arrangement& a, const Sketch& w) {
  if (w.m() != a.m() || w.n() != a.n()) {
    throw SketchError(SketchError::Kind::bound_mismatch,
                      "sketch bounds do not match the arrangement");
  }
  const int n = a.n();
  ParkingFunction p{std::vector<int>(n, 0)};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int s : a.splus(i, j)) {
        if (w.before({j, s}, {i, 0})) ++p.values[i - 1];
      }
    }
  }
  return p;
}

std::vector<PsiState> psi_trace(const Arrangement& a, const ParkingFunction& p, ZeroRule rule) {
  const auto d = build_d_graph(a);
  const BurnResult burned = burn(d, p);
  if (!burned.parking) {
    std::string unburned;
    for (int i = 1; i <= a.n(); ++i) {
      if (!burned.burned[i - 1]) unburned += (unburned.empty() ? "" : ",") + std::to_string(i);
    }
    throw NotParkingError(to_string(p) + " is not a parking function: vertices {" + unburned +
                              "} never burn",
                          burned.burned);
  }

  const int n = a.n();
  const int m = a.m();
  const std::size_t letters = static_cast<std::size_t>(m + 1) * n;
  std::vector<int> tuple = p.values;
  std::deque<int> queue;
  std::vector<Letter> emitted;
  std::vector<PsiState> trace;

  // Subtract 1 from coordinate k and from every positive coordinate i with
  // s in S+_{i,k}.
  auto apply = [&](int k, int s) {
    for (int i = 1; i <= n; ++i) {
      if (i != k && tuple[i - 1] > 0 && a.in_splus(i, k, s)) --tuple[i - 1];
    }
    --tuple[k - 1];
  };

  for (int step = 1;; ++step) {
    PsiState state{step, tuple, {queue.begin(), queue.end()}, emitted, std::nullopt};

    int zero = -1;
    if (rule == ZeroRule::rightmost) {
      for (int i = n; i >= 1 && zero < 0; --i) {
        if (tuple[i - 1] == 0) zero = i;
      }
    } else {
      for (int i = 1; i <= n && zero < 0; ++i) {
        if (tuple[i - 1] == 0) zero = i;
      }
    }
    if (zero < 0 && queue.empty()) {
      trace.push_back(std::move(state));
      return trace;
    }
    if (emitted.size() == letters) {
      throw std::logic_error("Psi would emit more than (m+1)n letters");
    }

    Letter letter;
    if (zero > 0) {
      letter = {zero, 0};
      apply(zero, 0);
      // Same re-queue rule as Case 2 with s = 0; matters only when m = 0.
      if (m > 0) queue.push_back(zero);
    } else {
      const int k = queue.front();
      queue.pop_front();
      letter = {k, -tuple[k - 1]};
      apply(k, letter.level);
      if (letter.level < m) queue.push_back(k);
    }
    state.letter = letter;
    emitted.push_back(letter);
    trace.push_back(std::move(state));
  }
}

Sketch psi(const Arrangement& a, const ParkingFunction& p, ZeroRule rule) {
  const auto trace = psi_trace(a, p, rule);
  return validate_sketch(trace.back().emitted, a.m(), a.n());
}

Region inverse_region(const Arrangement& a, const ParkingFunction& p) {
  return sign_vector(psi(a, p), a);
}

namespace {

std::string join(const std::vector<int>& values, char open, char close) {
  std::string out(1, open);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values[k]);
  }
  return out + close;
}

}  // namespace

std::string format_trace(const std::vector<PsiState>& trace) {
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"r", "P_r", "O_r", "w_r"});
  for (const auto& state : trace) {
    rows.push_back({std::to_string(state.step), join(state.tuple, '(', ')'),
                    join(state.queue, '[', ']'), state.letter ? to_string(*state.letter) : "-"});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      std::string cell = row[c];
      if (c == 0) cell.insert(0, width[0] - cell.size(), ' ');
      if (c + 1 < 4) cell.append(width[c] - cell.size() + 2, ' ');
      line += cell;
    }
    out << line << '\n';
  }
  out << "sketch: " << to_string(std::span<const Letter>(trace.back().emitted)) << '\n';
  return out.str();
}

}  // namespace pakstanley
