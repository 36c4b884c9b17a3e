#include "pakstanley/svg.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace pakstanley {

namespace {

// x_i as a linear form in (alpha, beta).
constexpr int kAlpha[3] = {1, -1, 0};
constexpr int kBeta[3] = {1, 1, -2};

// Compare against a Rational, not an int: under C++20 rewritten comparisons
// boost's mixed rational/int operator== recurses forever.
const Rational kZero(0);

struct Line {
  Rational a;  // coefficient of alpha
  Rational b;  // coefficient of beta
  Rational c;  // x_i - x_j = c

  Rational eval(const PlanePoint& p) const { return a * p.alpha + b * p.beta - c; }
};

Line line_of(const Hyperplane& h) {
  return {Rational(kAlpha[h.i - 1] - kAlpha[h.j - 1]), Rational(kBeta[h.i - 1] - kBeta[h.j - 1]),
          Rational(h.offset)};
}

std::vector<PlanePoint> window(const Arrangement& a) {
  const Rational wa = window_alpha(a);
  const Rational wb = window_beta(a);
  return {{-wa, -wb}, {wa, -wb}, {wa, wb}, {-wa, wb}};
}

// Keeps the part of a convex polygon where sign * line.eval(p) <= 0.
std::vector<PlanePoint> clip(const std::vector<PlanePoint>& polygon, const Line& line, int sign) {
  std::vector<PlanePoint> out;
  const std::size_t size = polygon.size();
  for (std::size_t k = 0; k < size; ++k) {
    const PlanePoint& p = polygon[k];
    const PlanePoint& q = polygon[(k + 1) % size];
    const Rational fp = line.eval(p) * sign;
    const Rational fq = line.eval(q) * sign;
    if (fp <= kZero) out.push_back(p);
    if ((fp < kZero && fq > kZero) || (fp > kZero && fq < kZero)) {
      const Rational t = fp / (fp - fq);
      out.push_back({p.alpha + (q.alpha - p.alpha) * t, p.beta + (q.beta - p.beta) * t});
    }
  }
  std::vector<PlanePoint> unique;
  for (const auto& p : out) {
    if (unique.empty() || (!(unique.back() == p) && !(unique.front() == p))) unique.push_back(p);
  }
  return unique;
}

PlanePoint mean(const std::vector<PlanePoint>& points) {
  PlanePoint sum{Rational(0), Rational(0)};
  for (const auto& p : points) {
    sum.alpha += p.alpha;
    sum.beta += p.beta;
  }
  const Rational count(static_cast<long long>(points.size()));
  return {sum.alpha / count, sum.beta / count};
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string label_text(const ParkingFunction& p) {
  bool small = true;
  for (int v : p.values) small = small && v < 10;
  std::string out;
  for (int k = 0; k < p.size(); ++k) {
    if (k && !small) out += ',';
    out += std::to_string(p.values[k]);
  }
  return out;
}

std::string csv(const ParkingFunction& p) {
  std::string out;
  for (int k = 0; k < p.size(); ++k) out += (k ? "," : "") + std::to_string(p.values[k]);
  return out;
}

}  // namespace

Rational window_alpha(const Arrangement& a) {
  return Rational(2 * (a.m() + 1));
}

Rational window_beta(const Arrangement& a) {
  return Rational(a.m() + 1);
}

std::vector<RegionCell> region_cells(const Arrangement& a, const RegionTable& table) {
  if (a.n() != 3) {
    throw ArrangementError("drawing needs n = 3, got n = " + std::to_string(a.n()));
  }
  std::vector<RegionCell> cells;
  for (std::size_t r = 0; r < table.regions.size(); ++r) {
    std::vector<PlanePoint> polygon = window(a);
    const auto& hyperplanes = a.hyperplanes();
    for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
      const int sign = table.regions[r].signs[h] == Side::below ? 1 : -1;
      polygon = clip(polygon, line_of(hyperplanes[h]), sign);
    }
    RegionCell cell{r, polygon, mean(polygon)};
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::string render_svg(const Arrangement& a, const RegionTable& table) {
  const auto cells = region_cells(a, table);
  const double root2 = std::sqrt(2.0);
  const double root6 = std::sqrt(6.0);
  const double half_u = to_double(window_alpha(a)) * root2;
  const double half_v = to_double(window_beta(a)) * root6;
  const double size = 640.0;
  const double scale = size / (2.0 * std::max(half_u, half_v));
  const double margin = 10.0;
  const double width = 2.0 * half_u * scale + 2 * margin;
  const double height = 2.0 * half_v * scale + 2 * margin;

  auto px = [&](const PlanePoint& p) { return (to_double(p.alpha) * root2 + half_u) * scale + margin; };
  auto py = [&](const PlanePoint& p) { return (half_v - to_double(p.beta) * root6) * scale + margin; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <title>" << describe(a) << "</title>\n";
  out << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin
      << "\" height=\"" << height - 2 * margin << "\" fill=\"white\" stroke=\"black\"/>\n";

  const auto base = table.find(base_region(a));
  for (const auto& cell : cells) {
    if (!base || cell.region != *base) continue;
    out << "  <polygon class=\"base-region\" fill=\"#d0d0d0\" stroke=\"none\" points=\"";
    for (std::size_t k = 0; k < cell.polygon.size(); ++k) {
      out << (k ? " " : "") << px(cell.polygon[k]) << ',' << py(cell.polygon[k]);
    }
    out << "\"/>\n";
  }

  for (const auto& h : a.hyperplanes()) {
    const Line line = line_of(h);
    std::vector<PlanePoint> ends;
    for (const auto& p : clip(window(a), line, 1)) {
      if (line.eval(p) == kZero) ends.push_back(p);
    }
    if (ends.size() < 2) continue;
    out << "  <line class=\"hyperplane\" data-hyperplane=\"" << to_string(h) << "\" x1=\""
        << px(ends.front()) << "\" y1=\"" << py(ends.front()) << "\" x2=\"" << px(ends.back())
        << "\" y2=\"" << py(ends.back()) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  const double font = std::max(8.0, std::min(16.0, scale * 0.35));
  for (const auto& cell : cells) {
    const auto& label = table.labels[cell.region];
    out << "  <text class=\"label\" data-label=\"" << csv(label) << "\" data-region=\""
        << to_string(table.regions[cell.region]) << "\" x=\"" << px(cell.label_point)
        << "\" y=\"" << py(cell.label_point) << "\" font-size=\"" << font
        << "\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
        << label_text(label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pakstanley
