#include "oneone/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace oneone {

namespace {

std::string num(double v) {
  if (std::fabs(v) < 5e-10) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Frame {
  double x0, y0;  // model coordinates of the panel's lower-left corner
  double scale;
  double left, top;  // panel position on the page
  double height;     // model height of the panel

  std::string px(double x) const { return num(left + (x - x0) * scale); }
  std::string py(double y) const { return num(top + (y0 + height - y) * scale); }
};

// Liang-Barsky clip of a segment to an axis-aligned box; false when nothing remains.
bool clip(double& ax, double& ay, double& bx, double& by, double xmin, double ymin, double xmax, double ymax) {
  double t0 = 0, t1 = 1, dx = bx - ax, dy = by - ay;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {ax - xmin, xmax - ax, ay - ymin, ymax - ay};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0) {
      if (q[i] < 0) return false;
      continue;
    }
    double r = q[i] / p[i];
    if (p[i] < 0) t0 = std::max(t0, r);
    else t1 = std::min(t1, r);
    if (t0 > t1) return false;
  }
  double nax = ax + t0 * dx, nay = ay + t0 * dy;
  bx = ax + t1 * dx;
  by = ay + t1 * dy;
  ax = nax;
  ay = nay;
  return true;
}

void dot(std::ostringstream& out, const Frame& f, double x, double y, const char* fill, double r) {
  out << "<circle cx=\"" << f.px(x) << "\" cy=\"" << f.py(y) << "\" r=\"" << num(r) << "\" fill=\"" << fill
      << "\"/>\n";
}

void label(std::ostringstream& out, const Frame& f, double x, double y, const std::string& text) {
  out << "<text x=\"" << f.px(x) << "\" y=\"" << f.py(y) << "\" font-size=\"12\" font-family=\"sans-serif\">"
      << text << "</text>\n";
}

}  // namespace

std::string render_svg(const Diagram& d) {
  constexpr double kWidth = 480;
  constexpr double kMargin = 20;
  constexpr double kStripHeight = 200;
  const long classes = d.num_classes();

  std::ostringstream body;

  // Fundamental square.
  Frame sq{-0.5, -0.5, kWidth - 2 * kMargin, kMargin, kMargin, 1.0};
  body << "<g id=\"torus\">\n";
  body << "<rect x=\"" << sq.px(-0.5) << "\" y=\"" << sq.py(0.5) << "\" width=\"" << num(sq.scale)
       << "\" height=\"" << num(sq.scale) << "\" fill=\"none\" stroke=\"#999\"/>\n";
  for (double y : {-0.5, 0.5}) {
    body << "<line class=\"alpha\" x1=\"" << sq.px(-0.5) << "\" y1=\"" << sq.py(y) << "\" x2=\"" << sq.px(0.5)
         << "\" y2=\"" << sq.py(y) << "\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
  }
  const long n = d.num_vertices();
  for (long k = 0; k < n; ++k) {
    Point a = d.vertex(k), b = d.vertex(k + 1);
    double ax = a.x.get_d(), ay = a.y.get_d(), bx = b.x.get_d(), by = b.y.get_d();
    long ix_lo = static_cast<long>(std::floor(std::min(ax, bx) + 0.5)) - 1;
    long ix_hi = static_cast<long>(std::ceil(std::max(ax, bx) + 0.5)) + 1;
    long iy_lo = static_cast<long>(std::floor(std::min(ay, by) + 0.5)) - 1;
    long iy_hi = static_cast<long>(std::ceil(std::max(ay, by) + 0.5)) + 1;
    for (long i = ix_lo; i <= ix_hi; ++i) {
      for (long j = iy_lo; j <= iy_hi; ++j) {
        double x1 = ax - i, y1 = ay - j, x2 = bx - i, y2 = by - j;
        if (!clip(x1, y1, x2, y2, -0.5, -0.5, 0.5, 0.5)) continue;
        if (x1 == x2 && y1 == y2) continue;
        body << "<line class=\"beta\" x1=\"" << sq.px(x1) << "\" y1=\"" << sq.py(y1) << "\" x2=\"" << sq.px(x2)
             << "\" y2=\"" << sq.py(y2) << "\" stroke=\"#036\" stroke-width=\"1.5\"/>\n";
      }
    }
  }
  const auto pts = intersections(d);
  for (const auto& p : pts) {
    double x = p.alpha_position.get_d();
    if (x >= 0.5) x -= 1;
    body << "<circle class=\"intersection\" cx=\"" << sq.px(x) << "\" cy=\"" << sq.py(0.5) << "\" r=\"3\" fill=\""
         << (p.sign > 0 ? "#060" : "#a60") << "\"/>\n";
  }
  dot(body, sq, 0, 0, "#000", 4);
  label(body, sq, 0.02, 0.02, "z");
  double wx = frac(d.w().x + Rational(1, 2)).get_d() - 0.5;
  double wy = frac(d.w().y + Rational(1, 2)).get_d() - 0.5;
  dot(body, sq, wx, wy, "#fff", 4);
  body << "<circle cx=\"" << sq.px(wx) << "\" cy=\"" << sq.py(wy) << "\" r=\"4\" fill=\"none\" stroke=\"#000\"/>\n";
  label(body, sq, wx + 0.02, wy + 0.02, "w");
  body << "</g>\n";

  // One strip per class.
  double page_y = kMargin + sq.scale + kMargin;
  for (long c = 0; c < classes; ++c) {
    auto cls = class_intersections(d, c);
    auto bgs = bigons(d, c);
    Rational g_lo = cls.front().lift_parameter, g_hi = g_lo;
    for (const auto& p : cls) {
      g_lo = std::min(g_lo, p.lift_parameter);
      g_hi = std::max(g_hi, p.lift_parameter);
    }
    // Show a little of beta beyond the extreme crossings.
    auto curve = d.arc(g_lo - Rational(1, 2), g_hi + Rational(1, 2));
    double xmin = curve[0].x.get_d(), xmax = xmin, ymin = curve[0].y.get_d(), ymax = ymin;
    for (const auto& p : curve) {
      xmin = std::min(xmin, p.x.get_d());
      xmax = std::max(xmax, p.x.get_d());
      ymin = std::min(ymin, p.y.get_d());
      ymax = std::max(ymax, p.y.get_d());
    }
    const double line_y = static_cast<double>(c) + 0.5;
    ymin = std::min(ymin, line_y) - 0.25;
    ymax = std::max(ymax, line_y) + 0.25;
    xmin -= 0.25;
    xmax += 0.25;
    const double scale = std::min((kWidth - 2 * kMargin) / (xmax - xmin), kStripHeight / (ymax - ymin));
    Frame f{xmin, ymin, scale, kMargin, page_y + 16, ymax - ymin};

    body << "<g class=\"strip\" id=\"class-" << c << "\">\n";
    label(body, Frame{0, 0, 1, kMargin, page_y + 12, 0}, 0, 0, "class " + std::to_string(c));
    for (const auto& bg : bgs) {
      auto loop = bigon_boundary(d, bg);
      body << "<polygon class=\"bigon\" points=\"";
      for (std::size_t i = 0; i < loop.size(); ++i) {
        body << (i ? " " : "") << f.px(loop[i].x.get_d()) << "," << f.py(loop[i].y.get_d());
      }
      body << "\" fill=\"" << (bg.half_plane == HalfPlane::Upper ? "#9cf" : "#fc9")
           << "\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
    }
    body << "<line class=\"alpha\" x1=\"" << f.px(xmin) << "\" y1=\"" << f.py(line_y) << "\" x2=\"" << f.px(xmax)
         << "\" y2=\"" << f.py(line_y) << "\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
    body << "<polyline class=\"beta\" fill=\"none\" stroke=\"#036\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      body << (i ? " " : "") << f.px(curve[i].x.get_d()) << "," << f.py(curve[i].y.get_d());
    }
    body << "\"/>\n";
    for (long i = static_cast<long>(std::ceil(xmin)); i <= static_cast<long>(std::floor(xmax)); ++i) {
      for (long j = static_cast<long>(std::ceil(ymin)); j <= static_cast<long>(std::floor(ymax)); ++j) {
        dot(body, f, static_cast<double>(i), static_cast<double>(j), "#000", 3);
      }
    }
    const double wfx = d.w().x.get_d(), wfy = d.w().y.get_d();
    for (long i = static_cast<long>(std::ceil(xmin - wfx)); i <= static_cast<long>(std::floor(xmax - wfx)); ++i) {
      for (long j = static_cast<long>(std::ceil(ymin - wfy)); j <= static_cast<long>(std::floor(ymax - wfy)); ++j) {
        body << "<circle cx=\"" << f.px(wfx + i) << "\" cy=\"" << f.py(wfy + j)
             << "\" r=\"3\" fill=\"#fff\" stroke=\"#000\"/>\n";
      }
    }
    for (const auto& p : cls) {
      body << "<circle class=\"lift-intersection\" cx=\"" << f.px(p.lift_x.get_d()) << "\" cy=\"" << f.py(line_y)
           << "\" r=\"3\" fill=\"" << (p.sign > 0 ? "#060" : "#a60") << "\"/>\n";
    }
    body << "</g>\n";
    page_y += 16 + (ymax - ymin) * scale + kMargin;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(page_y)
      << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(page_y) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  out << body.str();
  out << "</svg>\n";
  return out.str();
}

}  // namespace oneone
