#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "pakstanley/arrangement.hpp"
#include "pakstanley/region.hpp"

namespace pakstanley {

using Rational = boost::rational<long long>;

// A point of the plane x1 + x2 + x3 = 0 written as
// alpha * (1,-1,0) + beta * (1,1,-2).
struct PlanePoint {
  Rational alpha;
  Rational beta;

  bool operator==(const PlanePoint&) const = default;
};

struct RegionCell {
  std::size_t region = 0;            // index into RegionTable::regions
  std::vector<PlanePoint> polygon;   // region closure clipped to the window
  PlanePoint label_point;            // mean of the polygon's vertices
};

// Window half-widths in the (alpha, beta) coordinates: |alpha| <= W and
// |beta| <= W/2 with W = 2(m+1). Every vertex of the arrangement has
// |alpha| <= m and |beta| <= m/2, so every region meets the window.
Rational window_alpha(const Arrangement& a);
Rational window_beta(const Arrangement& a);

// Exact clipped cells for every region of a 3-dimensional arrangement.
std::vector<RegionCell> region_cells(const Arrangement& a, const RegionTable& table);

// SVG 1.1 drawing of a 3-dimensional arrangement in the plane x1+x2+x3 = 0:
// one line per hyperplane, R_0 shaded, one label per region. Throws
// ArrangementError for n != 3.
std::string render_svg(const Arrangement& a, const RegionTable& table);

}  // namespace pakstanley
