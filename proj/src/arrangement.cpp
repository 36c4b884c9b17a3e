#include "pakstanley/arrangement.hpp"

#include <algorithm>
#include <sstream>

namespace pakstanley {

void Arrangement::check_pair(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw ArrangementError("index pair (" + std::to_string(i) + "," + std::to_string(j) +
                           ") out of range for n=" + std::to_string(n_));
  }
  if (i == j) {
    throw ArrangementError("index pair (" + std::to_string(i) + "," + std::to_string(j) +
                           ") must have distinct indices");
  }
}

const std::vector<int>& Arrangement::offsets(int i, int j) const {
  check_pair(i, j);
  if (i > j) {
    throw ArrangementError("offsets are stored for i < j only");
  }
  return offsets_[(i - 1) * n_ + (j - 1)];
}

const std::vector<int>& Arrangement::splus(int i, int j) const {
  check_pair(i, j);
  return splus_[(i - 1) * n_ + (j - 1)];
}

bool Arrangement::in_splus(int i, int j, int s) const {
  if (i == j) return false;
  const auto& set = splus(i, j);
  return std::binary_search(set.begin(), set.end(), s);
}

bool Arrangement::contains(const Hyperplane& h) const {
  return std::binary_search(hyperplanes_.begin(), hyperplanes_.end(), h);
}

Arrangement build_from_sets(int n, const OffsetSets& sets) {
  if (n < 1) {
    throw ArrangementError("dimension must be positive, got " + std::to_string(n));
  }
  Arrangement a;
  a.n_ = n;
  a.offsets_.assign(static_cast<std::size_t>(n) * n, {});
  a.splus_.assign(static_cast<std::size_t>(n) * n, {});

  for (const auto& [key, offsets] : sets) {
    const auto [i, j] = key;
    if (i < 1 || j < 1 || i > n || j > n) {
      throw ArrangementError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") has an index outside [1," + std::to_string(n) + "]");
    }
    if (i >= j) {
      throw ArrangementError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") must satisfy i < j");
    }
    for (int s : offsets) {
      a.hyperplanes_.push_back({i, j, s});
    }
  }
  std::sort(a.hyperplanes_.begin(), a.hyperplanes_.end());

  for (const auto& h : a.hyperplanes_) {
    a.offsets_[(h.i - 1) * n + (h.j - 1)].push_back(h.offset);
    if (h.offset > 0) {
      a.splus_[(h.i - 1) * n + (h.j - 1)].push_back(h.offset);
    } else {
      a.splus_[(h.j - 1) * n + (h.i - 1)].push_back(-h.offset);
    }
  }
  for (auto& set : a.splus_) {
    std::sort(set.begin(), set.end());
    if (!set.empty()) a.m_ = std::max(a.m_, set.back());
  }
  return a;
}

Arrangement build_from_hyperplanes(int n, const std::vector<Hyperplane>& hyperplanes) {
  OffsetSets sets;
  for (const auto& h : hyperplanes) {
    if (h.i > h.j) {
      sets[{h.j, h.i}].insert(-h.offset);
    } else {
      sets[{h.i, h.j}].insert(h.offset);
    }
  }
  return build_from_sets(n, sets);
}

void validate_m_eps(const MEpsData& data) {
  const int n = data.n();
  if (n < 1) {
    throw ArrangementError("(m,eps) data needs at least one coordinate");
  }
  if (data.eps.size() != static_cast<std::size_t>(n) * n) {
    throw ArrangementError("eps table has the wrong size");
  }
  for (int k = 1; k <= n; ++k) {
    if (data.m[k - 1] < 0) {
      throw ArrangementError("m_" + std::to_string(k) + " is negative");
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int e = data.epsilon(i, j);
      if (e != 0 && e != 1) {
        throw ArrangementError("eps_" + std::to_string(i) + "," + std::to_string(j) +
                               " must be 0 or 1");
      }
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (i == k || j == k) continue;
        if (data.epsilon(i, k) > data.epsilon(j, k)) {
          throw ArrangementError("eps monotonicity fails: eps_" + std::to_string(i) + "," +
                                 std::to_string(k) + " > eps_" + std::to_string(j) + "," +
                                 std::to_string(k));
        }
      }
    }
  }
}

Arrangement build_from_m_eps(const MEpsData& data) {
  validate_m_eps(data);
  const int n = data.n();
  std::vector<Hyperplane> hyperplanes;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int top = data.m[j - 1] - data.epsilon(i, j);
      const int bottom = i < j ? 1 : 0;
      for (int s = bottom; s <= top; ++s) {
        hyperplanes.push_back({i, j, s});
      }
    }
  }
  return build_from_hyperplanes(n, hyperplanes);
}

namespace {

// Fits column k (the sets S+_{i,k}, i != k) with a given m_k. Returns the
// lexicographically smallest eps column, or nullopt.
std::optional<std::vector<int>> fit_column(const Arrangement& a, int k, int mk) {
  const int n = a.n();
  std::vector<int> eps(n, 0);
  int previous = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    const int bottom = i < k ? 1 : 0;
    const auto& set = a.splus(i, k);
    bool allowed[2] = {false, false};
    if (set.empty()) {
      // [bottom; mk - e] must be empty.
      for (int e = 0; e < 2; ++e) allowed[e] = mk - e < bottom;
    } else {
      const int top = set.back();
      const bool interval = set.front() == bottom &&
                            static_cast<int>(set.size()) == top - bottom + 1;
      const int e = mk - top;
      if (interval && (e == 0 || e == 1)) allowed[e] = true;
    }
    int chosen = -1;
    for (int e = previous; e < 2; ++e) {
      if (allowed[e]) {
        chosen = e;
        break;
      }
    }
    if (chosen < 0) return std::nullopt;
    eps[i - 1] = chosen;
    previous = chosen;
  }
  return eps;
}

}  // namespace

std::optional<MEpsData> recognize_m_eps(const Arrangement& a) {
  const int n = a.n();
  MEpsData data = MEpsData::zeros(n);
  for (int k = 1; k <= n; ++k) {
    if (n == 1) break;
    // Least s >= 0 missing from some S+_{i,k} with s > 0 or i > k. For an
    // (m,eps) column this is min_i(m_k - eps_{i,k}) + 1, so m_k is s - 1 or s.
    int s = 0;
    for (;; ++s) {
      bool missing = false;
      for (int i = 1; i <= n && !missing; ++i) {
        if (i == k || (s == 0 && i < k)) continue;
        missing = !a.in_splus(i, k, s);
      }
      if (missing) break;
    }
    std::optional<std::vector<int>> column;
    int mk = std::max(s - 1, 0);
    for (; mk <= s; ++mk) {
      column = fit_column(a, k, mk);
      if (column) break;
    }
    if (!column) return std::nullopt;
    data.m[k - 1] = mk;
    for (int i = 1; i <= n; ++i) {
      if (i != k) data.set_epsilon(i, k, (*column)[i - 1]);
    }
  }
  if (build_from_m_eps(data) != a) return std::nullopt;
  return data;
}

std::vector<int> splus(const Arrangement& a, int i, int j) {
  return a.splus(i, j);
}

bool in_triple(const Arrangement& a, int i, int j, int s) {
  if (s < 0) {
    throw ArrangementError("Triple_S levels are non-negative, got " + std::to_string(s));
  }
  if (i == j) return false;
  return (s == 0 && i < j) || a.in_splus(i, j, s);
}

// Any violation needs (i,k,s+t) in Triple_S, hence s + t <= m. All ordered
// index triples are quantified; with i == j the condition says that Triple_S
// is closed downwards in the level for each ordered pair.
bool is_transitive(const Arrangement& a) {
  const int n = a.n();
  const int m = a.m();
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      if (i == k) continue;
      for (int j = 1; j <= n; ++j) {
        for (int s = 0; s <= m; ++s) {
          if (in_triple(a, i, j, s)) continue;
          for (int t = 0; s + t <= m; ++t) {
            if (!in_triple(a, j, k, t) && in_triple(a, i, k, s + t)) return false;
          }
        }
      }
    }
  }
  return true;
}

bool holds_x(const Arrangement& a) {
  const int n = a.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        for (int s : a.splus(j, k)) {
          if (!(a.in_splus(i, k, s) || (s == 0 && i < k))) return false;
        }
      }
    }
  }
  return true;
}

bool holds_y(const Arrangement& a) {
  const int n = a.n();
  const int m = a.m();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int s = 0; s <= m; ++s) {
        if (s == 0 && !(j < i)) continue;
        if (a.in_splus(i, j, s)) continue;
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == j) continue;
          for (int t = 1; s + t <= m; ++t) {
            if (a.in_splus(k, j, s + t)) return false;
          }
        }
      }
    }
  }
  return true;
}

Arrangement shi_arrangement(int n, int m) {
  OffsetSets sets;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int s = -m + 1; s <= m; ++s) sets[{i, j}].insert(s);
    }
  }
  return build_from_sets(n, sets);
}

Arrangement catalan_arrangement(int n, int m) {
  OffsetSets sets;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int s = -m; s <= m; ++s) sets[{i, j}].insert(s);
    }
  }
  return build_from_sets(n, sets);
}

Arrangement braid_arrangement(int n) {
  return catalan_arrangement(n, 0);
}

std::string to_string(const Hyperplane& h) {
  std::ostringstream out;
  out << "x" << h.i << "-x" << h.j << "=" << h.offset;
  return out.str();
}

std::string describe(const Arrangement& a) {
  std::ostringstream out;
  out << "n=" << a.n() << " {";
  bool first = true;
  for (const auto& h : a.hyperplanes()) {
    out << (first ? "" : ", ") << to_string(h);
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace pakstanley
