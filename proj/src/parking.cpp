#include "pakstanley/parking.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pakstanley {

std::string to_string(const ParkingFunction& p) {
  std::string out = "(";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.values[i]);
  }
  return out + ")";
}

ParkingFunction parse_parking_function(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']') continue;
    cleaned += (c == ',') ? ' ' : c;
  }
  std::istringstream in(cleaned);
  ParkingFunction p;
  std::string token;
  while (in >> token) {
    if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParkingError("'" + token + "' is not a non-negative integer");
    }
    p.values.push_back(std::stoi(token));
  }
  if (p.values.empty()) throw ParkingError("empty tuple");
  return p;
}

void DirectedMultigraph::set_arcs(int u, int v, int count) {
  if (u == v && count != 0) throw ParkingError("loops are not allowed");
  if (count < 0) throw ParkingError("arc multiplicities are non-negative");
  mult_[(u - 1) * (n_ + 1) + (v - 1)] = count;
}

int DirectedMultigraph::out_degree(int u) const {
  int total = 0;
  for (int v = 1; v <= n_ + 1; ++v) total += arcs(u, v);
  return total;
}

DirectedMultigraph build_d_graph(const Arrangement& a) {
  const int n = a.n();
  DirectedMultigraph d(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) d.set_arcs(i, j, static_cast<int>(a.splus(i, j).size()));
    }
    d.set_arcs(i, n + 1, 1);
  }
  return d;
}

namespace {

void check_length(const DirectedMultigraph& d, const ParkingFunction& p) {
  if (p.size() != d.n()) {
    throw ParkingError("tuple has length " + std::to_string(p.size()) + ", expected " +
                       std::to_string(d.n()));
  }
  for (int v : p.values) {
    if (v < 0) throw ParkingError("tuple entries must be non-negative");
  }
}

}  // namespace

bool is_parking_naive(const DirectedMultigraph& d, const ParkingFunction& p) {
  check_length(d, p);
  const int n = d.n();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto inside = [&](int v) { return v <= n && ((mask >> (v - 1)) & 1U); };
    bool has_escape = false;
    for (int u = 1; u <= n && !has_escape; ++u) {
      if (!inside(u)) continue;
      int leaving = 0;
      for (int v = 1; v <= n + 1; ++v) {
        if (!inside(v)) leaving += d.arcs(u, v);
      }
      has_escape = p[u] < leaving;
    }
    if (!has_escape) return false;
  }
  return true;
}

BurnResult burn(const DirectedMultigraph& d, const ParkingFunction& p) {
  check_length(d, p);
  const int n = d.n();
  std::vector<int> into_burned(n + 1, 0);
  std::vector<bool> burned(n + 2, false);
  burned[n + 1] = true;
  for (int u = 1; u <= n; ++u) into_burned[u] = d.arcs(u, n + 1);

  bool progress = true;
  int count = 0;
  while (progress) {
    progress = false;
    for (int u = 1; u <= n; ++u) {
      if (burned[u] || p[u] >= into_burned[u]) continue;
      burned[u] = true;
      ++count;
      progress = true;
      for (int v = 1; v <= n; ++v) into_burned[v] += d.arcs(v, u);
    }
  }
  BurnResult result;
  result.parking = count == n;
  result.burned.assign(burned.begin() + 1, burned.begin() + n + 1);
  return result;
}

bool is_parking_burning(const DirectedMultigraph& d, const ParkingFunction& p) {
  return burn(d, p).parking;
}

std::vector<ParkingFunction> enumerate_parking(const DirectedMultigraph& d) {
  const int n = d.n();
  std::vector<int> bound(n);
  for (int i = 1; i <= n; ++i) bound[i - 1] = d.out_degree(i);
  std::vector<ParkingFunction> out;
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b == 0; })) return out;

  ParkingFunction p{std::vector<int>(n, 0)};
  while (true) {
    if (is_parking_burning(d, p)) out.push_back(p);
    int pos = n - 1;
    while (pos >= 0 && ++p.values[pos] == bound[pos]) {
      p.values[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::int64_t count_parking_determinant(const DirectedMultigraph& d) {
  const int n = d.n();
  std::vector<std::vector<std::int64_t>> mat(n, std::vector<std::int64_t>(n, 0));
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      mat[u - 1][v - 1] = (u == v) ? d.out_degree(u) : -d.arcs(u, v);
    }
  }
  // Bareiss fraction-free elimination.
  std::int64_t sign = 1;
  std::int64_t previous = 1;
  for (int k = 0; k < n; ++k) {
    if (mat[k][k] == 0) {
      int swap_row = k + 1;
      while (swap_row < n && mat[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / previous;
      }
    }
    previous = mat[k][k];
  }
  return n == 0 ? 1 : sign * mat[n - 1][n - 1];
}

std::string to_string(const DirectedMultigraph& d) {
  std::ostringstream out;
  const int size = d.n() + 1;
  for (int u = 1; u <= size; ++u) {
    for (int v = 1; v <= size; ++v) {
      out << (v > 1 ? " " : "") << d.arcs(u, v);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pakstanley
