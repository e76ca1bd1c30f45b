#include "hyperspace/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hyperspace::svg {

namespace {

constexpr double kCanvas = 512.0;
constexpr double kMargin = 24.0;

// World -> canvas mapping with y pointing up.
struct Viewport {
  explicit Viewport(const AxisBox& view) : view(view) {
    const double w = std::max(view.extent(0), 1e-12);
    const double h = std::max(view.extent(1), 1e-12);
    scale = (kCanvas - 2.0 * kMargin) / std::max(w, h);
    width = w * scale + 2.0 * kMargin;
    height = h * scale + 2.0 * kMargin;
  }

  double x(double wx) const { return kMargin + (wx - view.lo()[0]) * scale; }
  double y(double wy) const { return height - kMargin - (wy - view.lo()[1]) * scale; }

  AxisBox view;
  double scale;
  double width;
  double height;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void draw(const Primitive& prim, const Viewport& vp, std::ostringstream& out) {
  if (const auto* p = std::get_if<Point>(&prim)) {
    out << "  <circle cx=\"" << num(vp.x((*p)[0])) << "\" cy=\"" << num(vp.y((*p)[1]))
        << "\" r=\"2\" fill=\"black\"/>\n";
  } else if (const auto* box = std::get_if<AxisBox>(&prim)) {
    if (box->is_point()) {
      draw(box->lo(), vp, out);
      return;
    }
    const double x0 = vp.x(box->lo()[0]), x1 = vp.x(box->hi()[0]);
    const double y0 = vp.y(box->hi()[1]), y1 = vp.y(box->lo()[1]);
    out << "  <rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(x1 - x0)
        << "\" height=\"" << num(y1 - y0)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  } else {
    const auto& seg = std::get<Segment>(prim);
    out << "  <line x1=\"" << num(vp.x(seg.p[0])) << "\" y1=\"" << num(vp.y(seg.p[1]))
        << "\" x2=\"" << num(vp.x(seg.q[0])) << "\" y2=\"" << num(vp.y(seg.q[1]))
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
}

}  // namespace

std::string render(const CompactSet& set, const AxisBox& view, double t) {
  if (set.dim() != 2 || view.dim() != 2) throw GeometryError("SVG output needs two dimensions");
  const Viewport vp(view);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(vp.width) << ' '
      << num(vp.height) << "\" width=\"" << num(vp.width) << "\" height=\"" << num(vp.height)
      << "\">\n";
  for (const auto& prim : primitives(set)) draw(prim, vp, out);
  out << "  <text x=\"4\" y=\"16\" font-family=\"monospace\" font-size=\"12\">t = " << t
      << "</text>\n</svg>\n";
  return out.str();
}

AxisBox common_view(const std::vector<io::Frame>& frames) {
  if (frames.empty()) throw GeometryError("no frames to frame");
  AxisBox view = bounding_box(frames.front().sample.set);
  for (const auto& f : frames) view = bounding_box(view, bounding_box(f.sample.set));
  return view;
}

std::vector<std::filesystem::path> write_frames(const std::vector<io::Frame>& frames,
                                                const std::filesystem::path& dir) {
  const AxisBox view = common_view(frames);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04zu.svg", i);
    const auto file = dir / name;
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << render(frames[i].sample.set, view, frames[i].t);
    written.push_back(file);
  }
  return written;
}

}  // namespace hyperspace::svg
