#include "pakstanley/region.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pakstanley {

std::string to_string(const Region& r) {
  std::string out;
  out.reserve(r.signs.size());
  for (Side side : r.signs) out += side == Side::below ? '-' : '+';
  return out;
}

std::optional<std::size_t> RegionTable::find(const Region& r) const {
  auto it = std::lower_bound(regions.begin(), regions.end(), r);
  if (it == regions.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - regions.begin());
}

Region sign_vector(const Sketch& w, const Arrangement& a) {
  if (w.m() != a.m() || w.n() != a.n()) {
    throw SketchError(SketchError::Kind::bound_mismatch,
                      "sketch bounds do not match the arrangement");
  }
  Region r;
  r.signs.reserve(a.size());
  for (const auto& [i, j, s] : a.hyperplanes()) {
    bool below;
    if (s >= 0) {
      below = w.before({i, 0}, {j, s});
    } else {
      below = !w.before({j, 0}, {i, -s});
    }
    r.signs.push_back(below ? Side::below : Side::above);
  }
  return r;
}

Region base_region(const Arrangement& a) {
  Region r;
  r.signs.reserve(a.size());
  for (const auto& h : a.hyperplanes()) {
    r.signs.push_back(h.offset >= 1 ? Side::below : Side::above);
  }
  return r;
}

ParkingFunction gps_label(const Arrangement& a, const Region& r) {
  const auto& hyperplanes = a.hyperplanes();
  if (r.signs.size() != hyperplanes.size()) {
    throw ArrangementError("sign vector has length " + std::to_string(r.signs.size()) +
                           ", arrangement has " + std::to_string(hyperplanes.size()) +
                           " hyperplanes");
  }
  const Region base = base_region(a);
  ParkingFunction p{std::vector<int>(a.n(), 0)};
  for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
    if (r.signs[h] == base.signs[h]) continue;
    const auto& [i, j, s] = hyperplanes[h];
    // s > 0 is s in S+_{i,j}; s <= 0 is -s in S+_{j,i}.
    if (s > 0) {
      ++p.values[i - 1];
    } else {
      ++p.values[j - 1];
    }
  }
  return p;
}

RegionTable enumerate_regions(const Arrangement& a, const std::vector<Sketch>& sketches) {
  std::map<Region, std::size_t> first_sketch;
  std::vector<Region> per_sketch;
  per_sketch.reserve(sketches.size());
  for (std::size_t k = 0; k < sketches.size(); ++k) {
    per_sketch.push_back(sign_vector(sketches[k], a));
    first_sketch.emplace(per_sketch.back(), k);
  }
  RegionTable table;
  table.sketches = sketches;
  for (const auto& [region, k] : first_sketch) {
    table.regions.push_back(region);
    table.labels.push_back(gps_label(a, region));
    table.witnesses.push_back(sketches[k]);
  }
  table.region_of.reserve(sketches.size());
  for (const auto& region : per_sketch) table.region_of.push_back(*table.find(region));
  return table;
}

RegionTable enumerate_regions(const Arrangement& a) {
  return enumerate_regions(a, enumerate_sketches(a.m(), a.n()));
}

LabelingReport labeling_report(const Arrangement& a, const RegionTable& table) {
  const auto park = enumerate_parking(build_d_graph(a));
  const std::set<ParkingFunction> labels(table.labels.begin(), table.labels.end());
  const std::set<ParkingFunction> park_set(park.begin(), park.end());
  LabelingReport report;
  report.regions = table.regions.size();
  report.distinct_labels = labels.size();
  report.parking_functions = park.size();
  report.injective = labels.size() == table.regions.size();
  report.surjective = labels == park_set;
  report.bijective = report.injective && report.surjective;
  return report;
}

LabelingReport labeling_report(const Arrangement& a) {
  return labeling_report(a, enumerate_regions(a));
}

}  // namespace pakstanley
