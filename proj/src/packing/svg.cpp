#include "thinlab/packing/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <sstream>

namespace thinlab {

namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void cover(const InversiveCircle& c) {
    const double r = c.radius(), x = c.center_x(), y = c.center_y();
    x0 = std::min(x0, x - r);
    x1 = std::max(x1, x + r);
    y0 = std::min(y0, y - r);
    y1 = std::max(y1, y + r);
  }
  bool empty() const { return !(x0 < x1 && y0 < y1); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string curvature_text(const InversiveCircle& c) {
  if (c.b.is_rational()) return c.b.coef.get_str();
  return fmt(c.b.value());
}

class Canvas {
 public:
  Canvas(const Box& box, double size) : box_(box), size_(size) {
    scale_ = size / std::max(box.x1 - box.x0, box.y1 - box.y0);
  }

  double px(double x) const { return (x - box_.x0) * scale_; }
  double py(double y) const { return (box_.y1 - y) * scale_; }
  double len(double r) const { return r * scale_; }

  // Endpoints of the line {p : n.p = d} clipped to the view box, if it crosses it.
  bool clip_line(double nx, double ny, double d, double out[4]) const {
    std::vector<std::pair<double, double>> pts;
    const double xs[2] = {box_.x0, box_.x1}, ys[2] = {box_.y0, box_.y1};
    if (std::abs(ny) > 1e-15)
      for (double x : xs) {
        const double y = (d - nx * x) / ny;
        if (y >= box_.y0 && y <= box_.y1) pts.emplace_back(x, y);
      }
    if (std::abs(nx) > 1e-15)
      for (double y : ys) {
        const double x = (d - ny * y) / nx;
        if (x >= box_.x0 && x <= box_.x1) pts.emplace_back(x, y);
      }
    if (pts.size() < 2) return false;
    out[0] = px(pts[0].first);
    out[1] = py(pts[0].second);
    out[2] = px(pts.back().first);
    out[3] = py(pts.back().second);
    return true;
  }

 private:
  Box box_;
  double size_;
  double scale_ = 1.0;
};

void emit(std::ostream& os, const Canvas& cv, const InversiveCircle& c, const char* cls, const char* stroke,
          double width) {
  if (c.is_line()) {
    // For a line, (bx1, bx2) is the unit normal and b_hat / 2 the signed offset.
    double p[4];
    if (!cv.clip_line(c.bx1.value(), c.bx2.value(), c.b_hat.value() / 2, p)) {
      os << "<line class=\"" << cls << "\" x1=\"0\" y1=\"0\" x2=\"0\" y2=\"0\" stroke=\"" << stroke
         << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
      return;
    }
    os << "<line class=\"" << cls << "\" x1=\"" << fmt(p[0]) << "\" y1=\"" << fmt(p[1]) << "\" x2=\""
       << fmt(p[2]) << "\" y2=\"" << fmt(p[3]) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
       << "\"/>\n";
    return;
  }
  os << "<circle class=\"" << cls << "\" cx=\"" << fmt(cv.px(c.center_x())) << "\" cy=\""
     << fmt(cv.py(c.center_y())) << "\" r=\"" << fmt(cv.len(c.radius())) << "\" fill=\"none\" stroke=\"" << stroke
     << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
}

}  // namespace

std::string render_svg(const PackingOrbit& orbit, const SvgOptions& options) {
  Box box;
  const OrbitCircle* bounding = nullptr;
  for (const auto& c : orbit.circles)
    if (c.bounding) bounding = &c;
  if (bounding) {
    box.cover(bounding->circle);
  } else {
    for (const auto& c : orbit.circles)
      if (!c.circle.is_line()) box.cover(c.circle);
  }
  if (box.empty()) box = Box{-1, -1, 1, 1};
  const double margin = 0.05 * std::max(box.x1 - box.x0, box.y1 - box.y0);
  box.x0 -= margin;
  box.y0 -= margin;
  box.x1 += margin;
  box.y1 += margin;
  const Canvas cv(box, options.size);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(options.size) << "\" height=\""
     << fmt(options.size) << "\" viewBox=\"0 0 " << fmt(options.size) << ' ' << fmt(options.size) << "\">\n";
  os << "<!-- thinlab packing: " << orbit.circles.size() << " orbit circles, " << orbit.mirrors.size()
     << " mirrors -->\n";
  os << "<!-- curvature sign: circles positive, the bounding circle negative, lines 0 -->\n";
  if (options.timestamp) {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    os << "<!-- generated " << buf << " -->\n";
  }
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g id=\"orbit\">\n";
  for (const auto& c : orbit.circles) emit(os, cv, c.circle, "orbit", "black", 1.0);
  os << "</g>\n";
  if (options.mirrors) {
    os << "<g id=\"mirrors\">\n";
    for (const auto& m : orbit.mirrors) emit(os, cv, m, "mirror", "red", 1.5);
    os << "</g>\n";
  }
  if (options.labels) {
    os << "<g id=\"labels\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
    for (const auto& c : orbit.circles) {
      if (c.circle.is_line() || std::abs(c.circle.b.value()) < 1.0) continue;
      double x = c.circle.center_x(), y = c.circle.center_y();
      double font = std::clamp(cv.len(c.circle.radius()) * 0.8, 1.0, 24.0);
      if (c.bounding) {
        // Put the bounding label just inside the top of the circle.
        y += c.circle.radius() * 0.92;
        font = 14.0;
      }
      os << "<text class=\"label\" x=\"" << fmt(cv.px(x)) << "\" y=\"" << fmt(cv.py(y)) << "\" font-size=\""
         << fmt(font) << "\">" << curvature_text(c.circle) << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace thinlab
