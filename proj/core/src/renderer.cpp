#include "copgeo/renderer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include "copgeo/error.hpp"
#include "copgeo/mcd_geometry.hpp"

namespace copgeo {
namespace {

struct Segment {
  double x0, y0, x1, y1;
};

std::vector<Segment> support_segments(const IntervalExchange& h) {
  std::vector<Segment> out;
  for (const auto& p : h.real_pieces()) {
    const double len = p.end - p.start;
    if (p.orientation > 0)
      out.push_back({p.start, p.target, p.end, p.target + len});
    else
      out.push_back({p.start, p.target + len, p.end, p.target});
  }
  return out;
}

std::vector<std::vector<Point<double>>> region_polygons(const IntervalExchange& h) {
  std::vector<std::vector<Point<double>>> out;
  for (const auto& poly : omega_region(h).polygons) {
    if (poly.size() < 3) continue;
    auto& q = out.emplace_back();
    for (const auto& v : poly) q.push_back({v.x.get_d(), v.y.get_d()});
  }
  return out;
}

void append_number(std::string& s, double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  s.append(buf, ptr);
}

std::string render_svg(const IntervalExchange& h, std::size_t size) {
  const double s = static_cast<double>(size);
  auto px = [&](double x) { return x * s; };
  auto py = [&](double y) { return (1.0 - y) * s; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(size) +
         "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) + " " +
         std::to_string(size) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(size) + "\" height=\"" + std::to_string(size) +
         "\" fill=\"white\" stroke=\"none\"/>\n";
  for (const auto& poly : region_polygons(h)) {
    out += "<path d=\"";
    for (std::size_t k = 0; k < poly.size(); ++k) {
      out += k == 0 ? "M" : " L";
      append_number(out, px(poly[k].x));
      out += ' ';
      append_number(out, py(poly[k].y));
    }
    out += " Z\" fill=\"magenta\" stroke=\"none\"/>\n";
  }
  const double width = std::max(1.0, s / 256.0);
  for (const auto& seg : support_segments(h)) {
    out += "<line x1=\"";
    append_number(out, px(seg.x0));
    out += "\" y1=\"";
    append_number(out, py(seg.y0));
    out += "\" x2=\"";
    append_number(out, px(seg.x1));
    out += "\" y2=\"";
    append_number(out, py(seg.y1));
    out += "\" stroke=\"black\" stroke-width=\"";
    append_number(out, width);
    out += "\"/>\n";
  }
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(size) + "\" height=\"" + std::to_string(size) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"";
  append_number(out, width);
  out += "\"/>\n</svg>\n";
  return out;
}

std::string render_pgm(const IntervalExchange& h, std::size_t size) {
  const double s = static_cast<double>(size);
  std::vector<unsigned char> img(size * size, kPgmBackground);
  auto put = [&](std::size_t col, std::size_t row, unsigned char v) { img[row * size + col] = v; };

  for (const auto& seg : support_segments(h)) {
    const double span = std::max(std::abs(seg.x1 - seg.x0), std::abs(seg.y1 - seg.y0));
    const std::size_t steps = static_cast<std::size_t>(std::ceil(span * s * 2)) + 1;
    for (std::size_t k = 0; k <= steps; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(steps);
      const double x = seg.x0 + t * (seg.x1 - seg.x0);
      const double y = seg.y0 + t * (seg.y1 - seg.y0);
      const auto col = std::min(size - 1, static_cast<std::size_t>(x * s));
      const auto row = std::min(size - 1, static_cast<std::size_t>((1.0 - y) * s));
      put(col, row, kPgmSupport);
    }
  }

  // Convex polygons: each pixel-centre row meets a polygon in one interval.
  for (const auto& poly : region_polygons(h)) {
    for (std::size_t row = 0; row < size; ++row) {
      const double yc = 1.0 - (static_cast<double>(row) + 0.5) / s;
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (std::size_t k = 0; k < poly.size(); ++k) {
        const auto& a = poly[k];
        const auto& b = poly[(k + 1) % poly.size()];
        if ((a.y <= yc) == (b.y <= yc)) continue;
        const double x = a.x + (yc - a.y) * (b.x - a.x) / (b.y - a.y);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
      if (!(lo < hi)) continue;
      // Pixel centres (col + 0.5)/s in [lo, hi).
      const double first = std::ceil(lo * s - 0.5);
      const double last = std::ceil(hi * s - 0.5) - 1;
      for (double c = std::max(first, 0.0); c <= std::min(last, s - 1); c += 1)
        put(static_cast<std::size_t>(c), row, kPgmFill);
    }
  }

  std::string out = "P5\n" + std::to_string(size) + " " + std::to_string(size) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.data()), img.size());
  return out;
}

}  // namespace

ImageFormat parse_image_format(std::string_view text) {
  if (text == "svg") return ImageFormat::Svg;
  if (text == "pgm") return ImageFormat::Pgm;
  throw Error(ErrorCode::UnsupportedFormat, "unsupported image format '" + std::string(text) + "'");
}

std::string_view extension(ImageFormat format) { return format == ImageFormat::Svg ? "svg" : "pgm"; }

std::string render_support_and_omega(const IntervalExchange& h, ImageFormat format, std::size_t size) {
  if (size < kMinImageSize)
    throw Error(ErrorCode::OutOfRange, "image size must be at least " + std::to_string(kMinImageSize));
  return format == ImageFormat::Svg ? render_svg(h, size) : render_pgm(h, size);
}

}  // namespace copgeo
