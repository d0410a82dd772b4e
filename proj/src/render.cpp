#include "rpf/render.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rpf {

namespace {

constexpr int kPad = 20;

std::string svg_open(int width, int height) {
  std::ostringstream ss;
  ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  return ss.str();
}

}  // namespace

std::string render_dyck_svg(const DyckPath& d) {
  const int m = d.m, n = d.n();
  const int w = n * kSvgCell + 2 * kPad;
  const int h = m * kSvgCell + 2 * kPad;
  auto px = [&](double x) { return kPad + x * kSvgCell; };
  auto py = [&](double y) { return kPad + (m - y) * kSvgCell; };

  std::ostringstream ss;
  ss << svg_open(w, h);
  for (int x = 0; x <= n; ++x)
    ss << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x)
       << "\" y2=\"" << py(m) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  for (int y = 0; y <= m; ++y)
    ss << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(n)
       << "\" y2=\"" << py(y) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  ss << "<line x1=\"" << px(0) << "\" y1=\"" << py(m) << "\" x2=\"" << px(n)
     << "\" y2=\"" << py(0) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  // walk from the bottom-right corner, keeping only direction changes
  std::vector<std::pair<int, int>> corners;
  corners.emplace_back(n, 0);
  int x = n, y = 0;
  for (int i = 0; i < n; ++i) {
    if (d.heights[i] > y) {
      if (corners.back() != std::make_pair(x, y)) corners.emplace_back(x, y);
      y = d.heights[i];
      corners.emplace_back(x, y);
    }
    --x;
  }
  corners.emplace_back(0, y);
  if (y < m) corners.emplace_back(0, m);
  std::vector<std::pair<int, int>> path;
  for (const auto& c : corners)
    if (path.empty() || path.back() != c) path.push_back(c);

  ss << "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"3\" points=\"";
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) ss << " ";
    ss << px(path[i].first) << "," << py(path[i].second);
  }
  ss << "\"/>\n</svg>\n";
  return ss.str();
}

std::string render_lattice_svg(const InvariantSet& s, int m, int n) {
  Skeleton sk = skeleton(s, m, n);
  std::set<long long> gen, cogen;
  for (const SkeletonEntry& e : sk)
    (e.kind == SkeletonKind::generator ? gen : cogen).insert(e.value);

  // box (x, y) carries label -n*x - m*y; members extend left and down
  auto label = [&](long long x, long long y) { return -n * x - m * y; };
  const int cols = m + n + 1;
  std::vector<long long> top(cols);
  for (int x = 0; x < cols; ++x) {
    long long y = 0;
    while (!set_contains(s, label(x, y))) --y;     // label grows going down
    while (set_contains(s, label(x, y + 1))) ++y;  // climb while still a member
    top[x] = y;
  }
  long long ymax = *std::max_element(top.begin(), top.end()) + 1;
  long long ymin = *std::min_element(top.begin(), top.end()) - 2;

  const int w = cols * kSvgCell + 2 * kPad;
  const int h = static_cast<int>(ymax - ymin + 1) * kSvgCell + 2 * kPad;
  auto px = [&](double x) { return kPad + x * kSvgCell; };
  auto py = [&](double y) { return kPad + (ymax - y) * kSvgCell; };

  std::ostringstream ss;
  ss << svg_open(w, h);
  for (int x = 0; x < cols; ++x) {
    for (long long y = ymin; y <= ymax; ++y) {
      long long l = label(x, y);
      ss << "<rect x=\"" << px(x) << "\" y=\"" << py(y) << "\" width=\"" << kSvgCell
         << "\" height=\"" << kSvgCell
         << "\" fill=\"none\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
      std::string color = "black";
      if (gen.count(l)) color = "blue";
      if (cogen.count(l)) color = "red";
      ss << "<text x=\"" << px(x) + kSvgCell / 2.0 << "\" y=\"" << py(y) + kSvgCell / 2.0 + 5
         << "\" text-anchor=\"middle\" font-size=\"13\" fill=\"" << color << "\">" << l
         << "</text>\n";
    }
  }
  // boundary of the member region: top and right edges against non-members
  for (int x = 0; x < cols; ++x) {
    for (long long y = ymin; y <= ymax; ++y) {
      if (!set_contains(s, label(x, y))) continue;
      if (!set_contains(s, label(x, y + 1)))
        ss << "<line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x + 1)
           << "\" y2=\"" << py(y) << "\" stroke=\"blue\" stroke-width=\"3\"/>\n";
      if (x + 1 < cols && !set_contains(s, label(x + 1, y)))
        ss << "<line x1=\"" << px(x + 1) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x + 1)
           << "\" y2=\"" << py(y - 1) << "\" stroke=\"blue\" stroke-width=\"3\"/>\n";
    }
  }
  ss << "</svg>\n";
  return ss.str();
}

std::string render_orbit_svg(const ParkingWord& w, const WeylPoint& start,
                             long long budget) {
  if (w.m != 3 || start.m != 3)
    throw std::invalid_argument("render: orbit plots are rank 3 only");

  // letter-by-letter orbit until a full-word repeat
  std::vector<WeylPoint> points{start};
  {
    std::set<std::vector<long long>> seen;
    WeylPoint cur = start;
    auto key = [](const WeylPoint& p) {
      std::vector<long long> k = p.num;
      k.push_back(p.den);
      return k;
    };
    seen.insert(key(cur));
    for (long long step = 0; step < budget; ++step) {
      for (int letter : w.letters) {
        cur = act_letter(cur, letter).first;
        points.push_back(cur);
      }
      if (!seen.insert(key(cur)).second) break;
    }
  }

  auto X = [](const WeylPoint& p) {
    return static_cast<double>(p.num[2] - p.num[0]) / p.den;
  };
  auto Y = [](const WeylPoint& p) {
    return (2.0 * p.num[1] - p.num[0] - p.num[2]) / (p.den * std::sqrt(3.0));
  };

  double xmin = X(points[0]), xmax = xmin, ymin = Y(points[0]), ymax = ymin;
  for (const WeylPoint& p : points) {
    xmin = std::min(xmin, X(p));
    xmax = std::max(xmax, X(p));
    ymin = std::min(ymin, Y(p));
    ymax = std::max(ymax, Y(p));
  }
  xmin -= 2; xmax += 2; ymin -= 2; ymax += 2;
  const double scale = kSvgCell / 2.0;
  const int w_px = static_cast<int>((xmax - xmin) * scale) + 2 * kPad;
  const int h_px = static_cast<int>((ymax - ymin) * scale) + 2 * kPad;
  auto px = [&](double x) { return kPad + (x - xmin) * scale; };
  auto py = [&](double y) { return kPad + (ymax - y) * scale; };

  std::ostringstream ss;
  ss << svg_open(w_px, h_px);
  // wall families in the projection: vertical, slope +-1/sqrt(3)
  for (long long k = static_cast<long long>(std::floor(xmin / 3)) * 3;
       k <= static_cast<long long>(std::ceil(xmax)); k += 3) {
    ss << "<line x1=\"" << px(k) << "\" y1=\"" << py(ymin) << "\" x2=\"" << px(k)
       << "\" y2=\"" << py(ymax) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  double span = (xmax - xmin) + (ymax - ymin) * std::sqrt(3.0);
  for (long long k = -static_cast<long long>(span); k <= span; k += 3) {
    // a = x1 - x0 = k: passes through (k, k/sqrt3) with direction (1, -1/sqrt3)
    double x0 = k, y0 = k / std::sqrt(3.0);
    ss << "<line x1=\"" << px(x0 - span) << "\" y1=\"" << py(y0 + span / std::sqrt(3.0))
       << "\" x2=\"" << px(x0 + span) << "\" y2=\"" << py(y0 - span / std::sqrt(3.0))
       << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    double x1 = k, y1 = -k / std::sqrt(3.0);
    ss << "<line x1=\"" << px(x1 - span) << "\" y1=\"" << py(y1 - span / std::sqrt(3.0))
       << "\" x2=\"" << px(x1 + span) << "\" y2=\"" << py(y1 + span / std::sqrt(3.0))
       << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  if (points.size() > 1) {
    ss << "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < points.size(); ++i) {
      if (i) ss << " ";
      ss << px(X(points[i])) << "," << py(Y(points[i]));
    }
    ss << "\"/>\n";
  }
  for (size_t i = 0; i < points.size(); ++i) {
    ss << "<circle cx=\"" << px(X(points[i])) << "\" cy=\"" << py(Y(points[i]))
       << "\" r=\"4\" fill=\"" << (i == 0 ? "red" : "blue") << "\"/>\n";
  }
  ss << "</svg>\n";
  return ss.str();
}

}  // namespace rpf
