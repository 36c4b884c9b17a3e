#include "pakstanley/verify.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace pakstanley {

SketchCache::Entry& SketchCache::entry(int m, int n) {
  auto [it, inserted] = cache_.try_emplace({m, n});
  if (inserted) {
    it->second.sketches = enumerate_sketches(m, n);
    for (std::size_t k = 0; k < it->second.sketches.size(); ++k) {
      it->second.index.emplace(it->second.sketches[k], k);
    }
  }
  return it->second;
}

const std::vector<Sketch>& SketchCache::get(int m, int n) {
  return entry(m, n).sketches;
}

std::size_t SketchCache::index_of(const Sketch& w) {
  return entry(w.m(), w.n()).index.at(w);
}

std::size_t Analysis::count(const std::vector<bool>& flags) const {
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
}

Analysis analyze(const Arrangement& a, SketchCache& cache, const VerifyOptions& options) {
  Analysis out;
  out.arrangement = a;
  const auto& sketches = cache.get(a.m(), a.n());
  out.table = enumerate_regions(a, sketches);
  const auto d = build_d_graph(a);
  out.parking = enumerate_parking(d);
  out.report = labeling_report(a, out.table);
  out.transitive = is_transitive(a);
  out.x = holds_x(a);
  out.y = holds_y(a);
  out.m_eps = recognize_m_eps(a);
  out.determinant = count_parking_determinant(d);

  out.locally_maximal.resize(sketches.size());
  out.strictly_maximal.resize(sketches.size());
  out.psi_image.assign(sketches.size(), false);
  for (std::size_t k = 0; k < sketches.size(); ++k) {
    out.locally_maximal[k] = in_l(sketches[k], a);
    out.strictly_maximal[k] = in_m(sketches[k], a);
  }
  for (const auto& p : out.parking) {
    try {
      Sketch w = psi(a, p, options.rule);
      out.psi_image[cache.index_of(w)] = true;
      out.psi_words.emplace_back(std::move(w));
    } catch (const std::exception& e) {
      out.psi_words.emplace_back(std::nullopt);
      out.psi_failures.push_back(to_string(p) + ": " + e.what());
    }
  }
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Recorder {
public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  // Records one instance of a check; the first failing instance is kept.
  void expect(const std::string& name, bool ok, const std::function<std::string()>& detail) {
    auto it = std::find_if(report_.checks.begin(), report_.checks.end(),
                           [&](const CheckResult& c) { return c.name == name; });
    if (it == report_.checks.end()) {
      report_.checks.push_back({name, true, ""});
      it = report_.checks.end() - 1;
    }
    if (!ok && it->passed) {
      it->passed = false;
      it->counterexample = detail();
    }
  }

private:
  VerificationReport& report_;
};

std::string flag(bool value) { return value ? "true" : "false"; }

bool is_graphical(const Arrangement& a) {
  return std::all_of(a.hyperplanes().begin(), a.hyperplanes().end(),
                     [](const Hyperplane& h) { return h.offset == 0; });
}

// No i < j < k with x_i - x_j = 0 absent and x_i - x_k = 0 present.
bool graphical_pattern_free(const Arrangement& a) {
  const int n = a.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (!a.contains({i, j, 0}) && a.contains({i, k, 0})) return false;
      }
    }
  }
  return true;
}

int count_preceding(const Arrangement& a, int i, const std::vector<Letter>& prefix) {
  int total = 0;
  for (const auto& [j, t] : prefix) {
    if (j != i && a.in_splus(i, j, t)) ++total;
  }
  return total;
}

}  // namespace

VerificationReport verify_arrangement(const Arrangement& a, SketchCache& cache,
                                      const VerifyOptions& options) {
  VerificationReport report;
  Recorder check(report);
  const Analysis an = analyze(a, cache, options);
  const auto& sketches = an.table.sketches;
  const auto& table = an.table;
  const int n = a.n();
  const int m = a.m();
  const auto d = build_d_graph(a);

  // Right inverse.
  check.expect("psi-defined", an.psi_failures.empty(),
               [&] { return "Psi failed on " + an.psi_failures.front(); });
  for (std::size_t k = 0; k < an.parking.size(); ++k) {
    const auto& p = an.parking[k];
    const auto& w = an.psi_words[k];
    if (!w) continue;
    const auto back = phi(a, *w);
    check.expect("phi-psi-identity", back == p, [&] {
      return "p=" + to_string(p) + " Psi(p)=" + to_string(*w) + " Phi(Psi(p))=" + to_string(back);
    });
    check.expect("psi-in-m", in_m(*w, a) && in_l(*w, a),
                 [&] { return "p=" + to_string(p) + " Psi(p)=" + to_string(*w); });
    const auto label = gps_label(a, sign_vector(*w, a));
    check.expect("inverse-region-label", label == p, [&] {
      return "p=" + to_string(p) + " lambda(beta_S(Psi(p)))=" + to_string(label);
    });

    const auto trace = psi_trace(a, p, options.rule);
    for (const auto& state : trace) {
      for (int i = 1; i <= n; ++i) {
        const int q = state.tuple[i - 1];
        if (q < 0) continue;
        const int preceding = count_preceding(a, i, state.emitted);
        check.expect("trace-invariant", p[i] - q == preceding, [&] {
          return "p=" + to_string(p) + " step " + std::to_string(state.step) + " i=" +
                 std::to_string(i) + ": p_i - q_i=" + std::to_string(p[i] - q) +
                 " but counted " + std::to_string(preceding);
        });
      }
    }
    const auto& last = trace.back();
    const bool terminal_ok =
        last.queue.empty() &&
        std::all_of(last.tuple.begin(), last.tuple.end(), [&](int q) { return q == -(m + 1); });
    check.expect("psi-terminal-state", terminal_ok, [&] {
      return "p=" + to_string(p) + " terminal state is not all -(m+1) with empty queue";
    });
  }

  // Labels.
  for (std::size_t w = 0; w < sketches.size(); ++w) {
    const auto& label = table.labels[table.region_of[w]];
    const auto direct = phi(a, sketches[w]);
    check.expect("phi-equals-label", label == direct, [&] {
      return "w=" + to_string(sketches[w]) + " lambda=" + to_string(label) +
             " Phi=" + to_string(direct);
    });
  }
  for (std::size_t r = 0; r < table.regions.size(); ++r) {
    check.expect("labels-are-parking", is_parking_naive(d, table.labels[r]), [&] {
      return "region " + to_string(table.regions[r]) + " label " + to_string(table.labels[r]);
    });
  }
  check.expect("label-surjective", an.report.surjective, [&] {
    return std::to_string(an.report.distinct_labels) + " labels vs " +
           std::to_string(an.report.parking_functions) + " parking functions";
  });

  // beta_S on L_S.
  std::vector<int> fibre(table.regions.size(), 0);
  for (std::size_t w = 0; w < sketches.size(); ++w) {
    if (an.locally_maximal[w]) ++fibre[table.region_of[w]];
  }
  for (std::size_t r = 0; r < fibre.size(); ++r) {
    check.expect("beta-l-surjective", fibre[r] > 0,
                 [&] { return "region " + to_string(table.regions[r]) + " has no L_S sketch"; });
    if (an.transitive) {
      check.expect("beta-l-injective-if-transitive", fibre[r] <= 1, [&] {
        return "region " + to_string(table.regions[r]) + " has " + std::to_string(fibre[r]) +
               " L_S sketches";
      });
    }
  }
  const bool beta_l_bijective =
      std::all_of(fibre.begin(), fibre.end(), [](int f) { return f == 1; });

  // Set identities N_S <= M_S <= L_S.
  for (std::size_t w = 0; w < sketches.size(); ++w) {
    check.expect("m-subset-l", !an.strictly_maximal[w] || an.locally_maximal[w],
                 [&] { return "w=" + to_string(sketches[w]); });
    check.expect("n-subset-m", !an.psi_image[w] || an.strictly_maximal[w],
                 [&] { return "w=" + to_string(sketches[w]); });
  }
  check.expect("y-iff-m-equals-l", an.y == an.m_equals_l(), [&] {
    return "(Y)=" + flag(an.y) + " M_S=L_S: " + flag(an.m_equals_l());
  });
  check.expect("x-implies-n-equals-m", !an.x || an.n_equals_m(), [&] {
    return "(X) holds but |N_S|=" + std::to_string(an.count(an.psi_image)) +
           " |M_S|=" + std::to_string(an.count(an.strictly_maximal));
  });
  const bool nml = an.n_equals_m() && an.m_equals_l();
  check.expect("nml-implies-bijective", !nml || an.report.bijective,
               [] { return "N_S = M_S = L_S but lambda is not bijective"; });
  check.expect("bijective-implies-nml", !(an.report.bijective && beta_l_bijective) || nml,
               [] { return "lambda and beta_S on L_S bijective but N_S, M_S, L_S differ"; });

  // Parking functions.
  {
    std::vector<int> bound(n);
    for (int i = 1; i <= n; ++i) bound[i - 1] = d.out_degree(i);
    ParkingFunction p{std::vector<int>(n, 0)};
    while (true) {
      const bool naive = is_parking_naive(d, p);
      const bool burning = is_parking_burning(d, p);
      check.expect("burning-equals-naive", naive == burning, [&] {
        return "p=" + to_string(p) + " naive=" + flag(naive) + " burning=" + flag(burning);
      });
      int pos = n - 1;
      while (pos >= 0 && ++p.values[pos] == bound[pos]) p.values[pos--] = 0;
      if (pos < 0) break;
    }
  }
  check.expect("determinant-equals-count",
               an.determinant == static_cast<std::int64_t>(an.parking.size()), [&] {
                 return "determinant " + std::to_string(an.determinant) + " vs " +
                        std::to_string(an.parking.size()) + " parking functions";
               });
  check.expect("bijective-count",
               !an.report.bijective || an.parking.size() == table.regions.size(), [&] {
                 return std::to_string(table.regions.size()) + " regions vs " +
                        std::to_string(an.parking.size()) + " parking functions";
               });

  // (m, eps) and the transitive characterisation.
  if (an.m_eps) {
    check.expect("m-eps-round-trip", build_from_m_eps(*an.m_eps) == a,
                 [] { return "rebuilt arrangement differs"; });
    check.expect("m-eps-properties", an.x && an.y && an.transitive, [&] {
      return "(X)=" + flag(an.x) + " (Y)=" + flag(an.y) + " transitive=" + flag(an.transitive);
    });
    check.expect("m-eps-bijective", an.report.bijective, [&] {
      return std::to_string(an.report.regions) + " regions, " +
             std::to_string(an.report.distinct_labels) + " labels";
    });
  }
  if (an.transitive) {
    const bool conditions[4] = {an.report.bijective, nml, an.x && an.y, an.m_eps.has_value()};
    const bool agree = std::all_of(std::begin(conditions), std::end(conditions),
                                   [&](bool c) { return c == conditions[0]; });
    check.expect("transitive-equivalence", agree, [&] {
      return "bijective=" + flag(conditions[0]) + " N=M=L=" + flag(conditions[1]) +
             " (X)&(Y)=" + flag(conditions[2]) + " (m,eps)=" + flag(conditions[3]);
    });
  }
  if (is_graphical(a)) {
    check.expect("graphical-y", an.y, [] { return "(Y) fails on a graphical arrangement"; });
    const bool pattern = graphical_pattern_free(a);
    check.expect("graphical-x-pattern", an.x == pattern,
                 [&] { return "(X)=" + flag(an.x) + " pattern-free=" + flag(pattern); });
  }
  return report;
}

std::vector<Arrangement> exhaustive_battery(int n, int lo, int hi) {
  const int width = hi - lo + 1;
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t per_pair = std::uint64_t{1} << width;
  std::uint64_t total = 1;
  for (int k = 0; k < pairs; ++k) total *= per_pair;

  std::vector<std::pair<int, std::uint64_t>> order;
  order.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    int bits = 0;
    std::uint64_t rest = code;
    for (int k = 0; k < pairs; ++k) {
      bits += std::popcount(rest % per_pair);
      rest /= per_pair;
    }
    order.emplace_back(bits, code);
  }
  std::sort(order.begin(), order.end());

  std::vector<Arrangement> out;
  out.reserve(total);
  for (const auto& [bits, code] : order) {
    OffsetSets sets;
    std::uint64_t rest = code;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const std::uint64_t mask = rest % per_pair;
        rest /= per_pair;
        for (int b = 0; b < width; ++b) {
          if ((mask >> b) & 1U) sets[{i, j}].insert(lo + b);
        }
      }
    }
    out.push_back(build_from_sets(n, sets));
  }
  return out;
}

std::vector<MEpsData> random_m_eps(int n, int count, int max_m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(0, max_m);
  std::uniform_int_distribution<int> cut(0, n - 1);
  std::vector<MEpsData> out;
  for (int c = 0; c < count; ++c) {
    MEpsData data = MEpsData::zeros(n);
    for (int k = 1; k <= n; ++k) {
      data.m[k - 1] = level(rng);
      // eps_{.,k} is 0 on the first `zeros` indices other than k and 1 after.
      const int zeros = cut(rng);
      int seen = 0;
      for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        data.set_epsilon(i, k, seen++ < zeros ? 0 : 1);
      }
    }
    out.push_back(std::move(data));
  }
  return out;
}

BatteryReport run_battery(const std::vector<Arrangement>& arrangements,
                          const VerifyOptions& options) {
  BatteryReport report;
  SketchCache cache;
  for (const auto& a : arrangements) {
    const auto result = verify_arrangement(a, cache, options);
    ++report.arrangements;
    for (const auto& c : result.checks) {
      auto& [pass, fail] = report.tally[c.name];
      ++(c.passed ? pass : fail);
      if (!c.passed && !report.first_failure) report.first_failure = BatteryFailure{a, c};
    }
  }
  return report;
}

std::vector<Arrangement> default_battery(int samples, std::uint64_t seed) {
  auto out = exhaustive_battery(3, -2, 2);
  for (const auto& data : random_m_eps(4, samples, 2, seed)) {
    out.push_back(build_from_m_eps(data));
  }
  return out;
}

}  // namespace pakstanley
