#include "pakstanley/commands.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pakstanley/interpolate.hpp"
#include "pakstanley/parking.hpp"
#include "pakstanley/region.hpp"
#include "pakstanley/svg.hpp"
#include "pakstanley/verify.hpp"

namespace pakstanley {

using json = nlohmann::json;

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string pair_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

json m_eps_json(const MEpsData& data) {
  json eps = json::object();
  for (int i = 1; i <= data.n(); ++i) {
    for (int j = 1; j <= data.n(); ++j) {
      if (i != j && data.epsilon(i, j)) eps[pair_key(i, j)] = 1;
    }
  }
  return {{"m", data.m}, {"eps", eps}};
}

std::string m_eps_text(const MEpsData& data) {
  std::string out = "m=(";
  for (int k = 0; k < data.n(); ++k) out += (k ? "," : "") + std::to_string(data.m[k]);
  out += ")";
  bool any = false;
  for (int i = 1; i <= data.n(); ++i) {
    for (int j = 1; j <= data.n(); ++j) {
      if (i == j || !data.epsilon(i, j)) continue;
      out += " eps(" + pair_key(i, j) + ")=1";
      any = true;
    }
  }
  return any ? out : out + " eps=0";
}

// First two regions sharing a label, if any.
std::optional<std::pair<std::size_t, std::size_t>> duplicate_label(const RegionTable& table) {
  std::map<ParkingFunction, std::size_t> seen;
  for (std::size_t r = 0; r < table.labels.size(); ++r) {
    auto [it, inserted] = seen.emplace(table.labels[r], r);
    if (!inserted) return std::pair{it->second, r};
  }
  return std::nullopt;
}

std::string name_suffix(const ArrangementSpec& spec) {
  return spec.name ? " (" + *spec.name + ")" : "";
}

}  // namespace

std::string positive_form(const Hyperplane& h) {
  if (h.offset >= 0) return to_string(h);
  return "x" + std::to_string(h.j) + "-x" + std::to_string(h.i) + "=" + std::to_string(-h.offset);
}

CommandResult cmd_report(const ArrangementSpec& spec, bool as_json) {
  const Arrangement& a = spec.arrangement;
  const auto table = enumerate_regions(a);
  const auto report = labeling_report(a, table);
  const auto m_eps = recognize_m_eps(a);
  const auto determinant = count_parking_determinant(build_d_graph(a));
  const auto duplicate = duplicate_label(table);

  CommandResult result;
  if (as_json) {
    json hyperplanes = json::array();
    for (const auto& h : a.hyperplanes()) hyperplanes.push_back(to_string(h));
    json out = {{"n", a.n()},
                {"hyperplanes", hyperplanes},
                {"m", a.m()},
                {"transitive", is_transitive(a)},
                {"x", holds_x(a)},
                {"y", holds_y(a)},
                {"m_eps", m_eps ? m_eps_json(*m_eps) : json(nullptr)},
                {"regions", report.regions},
                {"distinct_labels", report.distinct_labels},
                {"parking_functions", report.parking_functions},
                {"injective", report.injective},
                {"surjective", report.surjective},
                {"bijective", report.bijective},
                {"determinant", determinant}};
    if (spec.name) out["name"] = *spec.name;
    if (duplicate) {
      out["duplicate_label"] = {
          {"label", to_string(table.labels[duplicate->first])},
          {"regions",
           {to_string(table.regions[duplicate->first]), to_string(table.regions[duplicate->second])}}};
    }
    result.out = out.dump(2) + "\n";
    return result;
  }

  std::ostringstream out;
  out << "arrangement" << name_suffix(spec) << ": n=" << a.n() << ", " << a.size()
      << " hyperplanes\n";
  for (const auto& h : a.hyperplanes()) out << "  " << to_string(h) << '\n';
  out << "m: " << a.m() << '\n';
  out << "transitive: " << yes_no(is_transitive(a)) << '\n';
  out << "(X): " << yes_no(holds_x(a)) << '\n';
  out << "(Y): " << yes_no(holds_y(a)) << '\n';
  out << "(m,eps): " << (m_eps ? m_eps_text(*m_eps) : std::string("no")) << '\n';
  out << "regions: " << report.regions << '\n';
  out << "distinct labels: " << report.distinct_labels << '\n';
  out << "parking functions: " << report.parking_functions << '\n';
  out << "determinant: " << determinant << '\n';
  out << "injective: " << yes_no(report.injective) << '\n';
  out << "surjective: " << yes_no(report.surjective) << '\n';
  out << "bijective: " << yes_no(report.bijective) << '\n';
  if (duplicate) {
    out << "shared label " << to_string(table.labels[duplicate->first]) << " on regions "
        << to_string(table.regions[duplicate->first]) << " and "
        << to_string(table.regions[duplicate->second]) << '\n';
  }
  result.out = out.str();
  return result;
}

CommandResult cmd_verify(const ArrangementSpec* spec, const VerifyRequest& request) {
  const VerifyOptions options{request.rule};
  CommandResult result;
  std::ostringstream out;

  if (!request.battery) {
    if (!spec) return {2, "", "verify: need an arrangement file or --battery\n"};
    SketchCache cache;
    const auto report = verify_arrangement(spec->arrangement, cache, options);
    json checks = json::array();
    for (const auto& check : report.checks) {
      if (request.as_json) {
        checks.push_back({{"name", check.name},
                          {"passed", check.passed},
                          {"counterexample", check.counterexample}});
        continue;
      }
      out << (check.passed ? "PASS " : "FAIL ") << check.name;
      if (!check.passed) out << ": " << check.counterexample;
      out << '\n';
    }
    if (request.as_json) {
      out << json{{"passed", report.passed()}, {"checks", checks}}.dump(2) << '\n';
    } else {
      out << (report.passed() ? "all checks passed" : "verification FAILED") << name_suffix(*spec)
          << '\n';
      if (!report.passed()) out << "arrangement: " << serialize_arrangement(spec->arrangement);
    }
    result.out = out.str();
    result.exit_code = report.passed() ? 0 : 1;
    return result;
  }

  const auto battery = default_battery(request.samples, request.seed);
  const auto report = run_battery(battery, options);
  if (request.as_json) {
    json tally = json::object();
    for (const auto& [name, counts] : report.tally) {
      tally[name] = {{"passed", counts.first}, {"failed", counts.second}};
    }
    json doc = {{"arrangements", report.arrangements}, {"passed", report.passed()}, {"checks", tally}};
    if (report.first_failure) {
      doc["first_failure"] = {
          {"check", report.first_failure->check.name},
          {"counterexample", report.first_failure->check.counterexample},
          {"arrangement", json::parse(serialize_arrangement(report.first_failure->arrangement))}};
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "battery: " << report.arrangements << " arrangements (seed " << request.seed << ", "
        << request.samples << " random n=4 samples)\n";
    for (const auto& [name, counts] : report.tally) {
      out << (counts.second ? "FAIL " : "PASS ") << name << ": " << counts.first << " passed, "
          << counts.second << " failed\n";
    }
    if (report.first_failure) {
      const auto& failure = *report.first_failure;
      out << "verification FAILED\n";
      out << "first counterexample: " << failure.check.name << ": " << failure.check.counterexample
          << '\n';
      out << "arrangement: " << serialize_arrangement(failure.arrangement);
    } else {
      out << "all checks passed\n";
    }
  }
  result.out = out.str();
  result.exit_code = report.passed() ? 0 : 1;
  return result;
}

CommandResult cmd_psi(const ArrangementSpec& spec, const std::string& tuple, bool with_region) {
  const Arrangement& a = spec.arrangement;
  ParkingFunction p;
  try {
    p = parse_parking_function(tuple);
  } catch (const ParkingError& e) {
    return {2, "", std::string("psi: ") + e.what() + "\n"};
  }
  if (p.size() != a.n()) {
    return {2, "",
            "psi: tuple has length " + std::to_string(p.size()) + ", arrangement has n = " +
                std::to_string(a.n()) + "\n"};
  }

  std::vector<PsiState> trace;
  try {
    trace = psi_trace(a, p);
  } catch (const NotParkingError& e) {
    std::string unburned;
    for (std::size_t k = 0; k < e.burned().size(); ++k) {
      if (!e.burned()[k]) unburned += (unburned.empty() ? "" : ",") + std::to_string(k + 1);
    }
    return {2, "",
            "psi: " + to_string(p) + " is not a parking function; vertices never burned: {" +
                unburned + "}\n"};
  }

  CommandResult result;
  result.out = format_trace(trace);
  if (with_region) {
    const Region r = inverse_region(a, p);
    result.out += "region: " + to_string(r) + "\n";
    result.out += "label: " + to_string(gps_label(a, r)) + "\n";
  }
  return result;
}

CommandResult cmd_svg(const ArrangementSpec& spec, const std::string& out_path) {
  if (spec.arrangement.n() != 3) {
    return {2, "", "svg: drawing needs n = 3, got n = " + std::to_string(spec.arrangement.n()) + "\n"};
  }
  const auto table = enumerate_regions(spec.arrangement);
  const std::string svg = render_svg(spec.arrangement, table);
  if (out_path.empty() || out_path == "-") return {0, svg, ""};

  std::ofstream file(out_path, std::ios::binary);
  file << svg;
  if (!file) return {2, "", "svg: cannot write " + out_path + "\n"};
  return {0, "wrote " + out_path + " (" + std::to_string(table.regions.size()) + " regions)\n", ""};
}

CommandResult cmd_interpolate(int n, int m, bool as_json) {
  std::vector<InterpolationStep> steps;
  try {
    steps = interpolate(n, m);
  } catch (const ArrangementError& e) {
    return {2, "", std::string("interpolate: ") + e.what() + "\n"};
  }

  bool ok = true;
  json rows = json::array();
  std::ostringstream out;
  if (!as_json) out << "step  added      regions  parking  det  (m,eps)  bijective\n";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& step = steps[k];
    const bool step_ok = step.m_eps && step.bijective &&
                         step.determinant == static_cast<std::int64_t>(step.regions) &&
                         step.parking_functions == step.regions;
    ok = ok && step_ok;
    const std::string added = step.added ? positive_form(*step.added) : "-";
    if (as_json) {
      rows.push_back({{"step", k},
                      {"added", step.added ? json(added) : json(nullptr)},
                      {"regions", step.regions},
                      {"parking_functions", step.parking_functions},
                      {"determinant", step.determinant},
                      {"m_eps", step.m_eps ? m_eps_json(*step.m_eps) : json(nullptr)},
                      {"bijective", step.bijective}});
      continue;
    }
    char line[128];
    std::snprintf(line, sizeof line, "%4zu  %-9s  %7zu  %7zu  %3lld  %-7s  %s\n", k, added.c_str(),
                  step.regions, step.parking_functions, static_cast<long long>(step.determinant),
                  yes_no(step.m_eps.has_value()), yes_no(step.bijective));
    out << line;
  }
  if (as_json) {
    out << json{{"n", n}, {"m", m}, {"passed", ok}, {"steps", rows}}.dump(2) << '\n';
  } else {
    out << (ok ? "every step bijective with regions = determinant\n" : "interpolation check FAILED\n");
  }
  return {ok ? 0 : 1, out.str(), ""};
}

}  // namespace pakstanley
