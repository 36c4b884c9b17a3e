#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pakstanley/arrangement.hpp"

namespace pakstanley {

struct ParkingFunction {
  std::vector<int> values;  // values[i-1] = p_i

  int size() const { return static_cast<int>(values.size()); }
  int operator[](int i) const { return values[i - 1]; }

  auto operator<=>(const ParkingFunction&) const = default;
};

std::string to_string(const ParkingFunction& p);
// Accepts "1,0,1", "(1,0,1)" or "1 0 1".
ParkingFunction parse_parking_function(const std::string& text);

class ParkingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Directed multigraph on [n+1]; vertex n+1 is the root.
class DirectedMultigraph {
public:
  explicit DirectedMultigraph(int n) : n_(n), mult_((n + 1) * (n + 1), 0) {}

  int n() const { return n_; }
  int root() const { return n_ + 1; }
  int arcs(int u, int v) const { return mult_[(u - 1) * (n_ + 1) + (v - 1)]; }
  void set_arcs(int u, int v, int count);
  int out_degree(int u) const;

  bool operator==(const DirectedMultigraph&) const = default;

private:
  int n_;
  std::vector<int> mult_;
};

// D_S: |S+_{i,j}| arcs i -> j, one arc i -> n+1.
DirectedMultigraph build_d_graph(const Arrangement& a);

// Subset definition: every non-empty U in [n] has u with p_u < #arcs(u, not U).
bool is_parking_naive(const DirectedMultigraph& d, const ParkingFunction& p);

struct BurnResult {
  bool parking = false;
  std::vector<bool> burned;  // burned[i-1] for i in [n]
};

// Burn the root, then repeatedly burn u with p_u < #arcs(u, burned).
BurnResult burn(const DirectedMultigraph& d, const ParkingFunction& p);
bool is_parking_burning(const DirectedMultigraph& d, const ParkingFunction& p);

// Lexicographic; candidates satisfy p_i < out_degree(i) (the U = {i} bound).
std::vector<ParkingFunction> enumerate_parking(const DirectedMultigraph& d);

// det(diag(outdeg) - mult) with the root row and column removed, i.e. the
// number of spanning arborescences oriented towards the root.
std::int64_t count_parking_determinant(const DirectedMultigraph& d);

std::string to_string(const DirectedMultigraph& d);

}  // namespace pakstanley
