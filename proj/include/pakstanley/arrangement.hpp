#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pakstanley {

class ArrangementError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The hyperplane x_i - x_j = offset, always stored with i < j (1-based).
struct Hyperplane {
  int i = 0;
  int j = 0;
  int offset = 0;

  auto operator<=>(const Hyperplane&) const = default;
};

using PairKey = std::pair<int, int>;
using OffsetSets = std::map<PairKey, std::set<int>>;

// An S-braid arrangement: hyperplanes x_i - x_j = s for s in S_{i,j}, i < j.
//
// Indices are 1-based throughout the public API. The positive-type sets S+ are
// a view over the stored hyperplanes:
//   i < j:  S+_{i,j} = { s > 0  : (i,j,s) stored }
//   i > j:  S+_{i,j} = { s >= 0 : (j,i,-s) stored }
class Arrangement {
public:
  Arrangement() = default;

  int n() const { return n_; }
  // max(0, max of all S+ sets); every stored offset lies in [-m, m].
  int m() const { return m_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }

  // S_{i,j} for i < j.
  const std::vector<int>& offsets(int i, int j) const;
  // S+_{i,j} for i != j, sorted ascending.
  const std::vector<int>& splus(int i, int j) const;
  bool in_splus(int i, int j, int s) const;
  bool contains(const Hyperplane& h) const;

  bool operator==(const Arrangement& other) const {
    return n_ == other.n_ && hyperplanes_ == other.hyperplanes_;
  }

  friend Arrangement build_from_sets(int n, const OffsetSets& sets);

private:
  void check_pair(int i, int j) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  // Row-major n*n tables, 0-based.
  std::vector<std::vector<int>> offsets_;
  std::vector<std::vector<int>> splus_;
};

// (m, eps) data. eps is an n*n table (row-major, 0-based); diagonal unused.
struct MEpsData {
  std::vector<int> m;
  std::vector<int> eps;

  int n() const { return static_cast<int>(m.size()); }
  int epsilon(int i, int j) const { return eps[(i - 1) * n() + (j - 1)]; }
  void set_epsilon(int i, int j, int value) { eps[(i - 1) * n() + (j - 1)] = value; }

  static MEpsData zeros(int n) {
    return MEpsData{std::vector<int>(n, 0), std::vector<int>(n * n, 0)};
  }

  bool operator==(const MEpsData&) const = default;
};

// Absent pairs mean the empty set. Keys must satisfy 1 <= i < j <= n.
Arrangement build_from_sets(int n, const OffsetSets& sets);

// Hyperplanes may be given with i > j; they are normalised via
// x_j - x_i = s  <=>  x_i - x_j = -s.
Arrangement build_from_hyperplanes(int n, const std::vector<Hyperplane>& hyperplanes);

// S+_{i,j} = [1; m_j - eps_{i,j}] for i < j and [0; m_j - eps_{i,j}] for i > j.
Arrangement build_from_m_eps(const MEpsData& data);

// Throws ArrangementError when eps is not 0/1, m is negative, or the
// monotonicity eps_{i,k} <= eps_{j,k} (i < j) fails.
void validate_m_eps(const MEpsData& data);

// The lexicographically smallest (m, eps) witness (m compared first, then eps
// in row-major order over ordered pairs), or nullopt if A is not an
// (m, eps)-arrangement.
std::optional<MEpsData> recognize_m_eps(const Arrangement& a);

std::vector<int> splus(const Arrangement& a, int i, int j);

// (i,j,s) in Triple_S  <=>  s in S+_{i,j}  or  (s == 0 and i < j).
bool in_triple(const Arrangement& a, int i, int j, int s);

bool is_transitive(const Arrangement& a);
bool holds_x(const Arrangement& a);
bool holds_y(const Arrangement& a);

// Named families used throughout tests and the CLI.
Arrangement shi_arrangement(int n, int m);
Arrangement catalan_arrangement(int n, int m);
Arrangement braid_arrangement(int n);

std::string to_string(const Hyperplane& h);
std::string describe(const Arrangement& a);

}  // namespace pakstanley
