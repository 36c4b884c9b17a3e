#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pakstanley/arrangement.hpp"
#include "pakstanley/parking.hpp"
#include "pakstanley/sketch.hpp"

namespace pakstanley {

// Side of the hyperplane x_i - x_j = s: below means x_i - x_j < s.
enum class Side : std::uint8_t { below = 0, above = 1 };

// A region of an arrangement, as its sign vector over a.hyperplanes().
struct Region {
  std::vector<Side> signs;

  auto operator<=>(const Region&) const = default;
};

std::string to_string(const Region& r);  // "-+-" with '-' for below

struct RegionTable {
  std::vector<Region> regions;          // sorted, below < above
  std::vector<ParkingFunction> labels;  // labels[k] = lambda(regions[k])
  std::vector<Sketch> witnesses;        // first sketch (enumeration order) of each region
  std::vector<Sketch> sketches;         // every (m,n)-sketch, enumeration order
  std::vector<std::size_t> region_of;   // region_of[w] indexes regions

  std::optional<std::size_t> find(const Region& r) const;
};

// beta_S: the region of A containing the Catalan region of w.
Region sign_vector(const Sketch& w, const Arrangement& a);

// Groups all (m,n)-sketches by sign vector.
RegionTable enumerate_regions(const Arrangement& a);
// Same, reusing a precomputed list of (m,n)-sketches for a's m and n.
RegionTable enumerate_regions(const Arrangement& a, const std::vector<Sketch>& sketches);

// R_0, the region containing the fundamental alcove: below exactly the
// hyperplanes with s >= 1.
Region base_region(const Arrangement& a);

// lambda(R): p_i counts (j, s), s in S+_{i,j}, whose hyperplane separates R
// from R_0.
ParkingFunction gps_label(const Arrangement& a, const Region& r);

struct LabelingReport {
  std::size_t regions = 0;
  std::size_t distinct_labels = 0;
  std::size_t parking_functions = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
};

LabelingReport labeling_report(const Arrangement& a);
LabelingReport labeling_report(const Arrangement& a, const RegionTable& table);

}  // namespace pakstanley
