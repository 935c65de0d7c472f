#include "dinikit/plot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace dinikit::plot {

using dini::CorollaryFn;

const char* flag_name(PointFlag f) {
  switch (f) {
    case PointFlag::kOk: return "ok";
    case PointFlag::kDenomNearZero: return "denom_near_zero";
    case PointFlag::kNonFinite: return "non_finite";
  }
  throw std::logic_error("flag_name: unknown flag");
}

ImageGrid image_domain(CorollaryFn fn, const verify::DiskSampling& spec) {
  ImageGrid grid;
  grid.fn = fn;
  grid.spec = spec;
  const std::vector<double> radii = verify::sampling_radii(spec);
  grid.points.reserve(radii.size() * static_cast<std::size_t>(spec.angles));
  for (const double r : radii) {
    for (int j = 0; j < spec.angles; ++j) {
      const double theta = 2.0 * M_PI * j / spec.angles;
      const Complex z{r * std::cos(theta), r * std::sin(theta)};
      ImagePoint pt;
      pt.src = verify::SamplePoint{r, theta, z};
      try {
        const Complex val = dini::corollary_fn(fn, z);
        pt.image = val;
        if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
          pt.flag = PointFlag::kNonFinite;
          ++grid.flagged;
        } else if (!grid.has_min || val.real() < grid.min_re) {
          grid.min_re = val.real();
          grid.argmin = pt.src;
          grid.has_min = true;
        }
      } catch (const dini::DivisionNearZero&) {
        pt.flag = PointFlag::kDenomNearZero;
        ++grid.flagged;
      }
      grid.points.push_back(pt);
    }
  }
  return grid;
}

verify::DiskSampling default_figure_spec() {
  verify::DiskSampling spec;
  spec.explicit_radii = {0.25, 0.5, 0.75, 0.999};
  spec.angles = 200;
  return spec;
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_svg(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

void write_csv(const ImageGrid& grid, std::ostream& out) {
  out << "src_re,src_im,img_re,img_im,flag\n";
  for (const ImagePoint& p : grid.points)
    out << fmt17(p.src.z.real()) << ',' << fmt17(p.src.z.imag()) << ',' << fmt17(p.image.real())
        << ',' << fmt17(p.image.imag()) << ',' << flag_name(p.flag) << '\n';
}

void write_svg(const ImageGrid& grid, std::ostream& out) {
  const dini::CorollaryInfo& info = dini::corollary_info(grid.fn);
  const double bound = info.claimed_bound.to_double();

  double xmin = bound, xmax = bound, ymin = 0.0, ymax = 0.0;
  bool any = false;
  for (const ImagePoint& p : grid.points) {
    if (p.flag != PointFlag::kOk) continue;
    if (!any) {
      ymin = p.image.imag();
      ymax = ymin;
      any = true;
    }
    xmin = std::min(xmin, p.image.real());
    xmax = std::max(xmax, p.image.real());
    ymin = std::min(ymin, p.image.imag());
    ymax = std::max(ymax, p.image.imag());
  }
  if (!any) {
    xmin = std::min(xmin, -1.0);
    xmax = std::max(xmax, 1.0);
    ymin = -1.0;
    ymax = 1.0;
  }
  const double xpad = std::max(0.05 * (xmax - xmin), 1e-3);
  const double ypad = std::max(0.05 * (ymax - ymin), 1e-3);
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;

  constexpr double kW = 800.0, kH = 600.0;
  const auto sx = [&](double x) { return (x - xmin) / (xmax - xmin) * kW; };
  const auto sy = [&](double y) { return (ymax - y) / (ymax - ymin) * kH; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";

  static const char* kPalette[6] = {"#1f77b4", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf"};
  std::size_t i = 0;
  int ring = 0;
  while (i < grid.points.size()) {
    const double r = grid.points[i].src.r;
    std::size_t end = i;
    while (end < grid.points.size() && grid.points[end].src.r == r) ++end;
    std::string pts;
    std::size_t first_ok = grid.points.size();
    for (std::size_t k = i; k < end; ++k) {
      const ImagePoint& p = grid.points[k];
      if (p.flag != PointFlag::kOk) continue;
      if (first_ok == grid.points.size()) first_ok = k;
      pts += fmt_svg(sx(p.image.real()));
      pts += ',';
      pts += fmt_svg(sy(p.image.imag()));
      pts += ' ';
    }
    if (first_ok < grid.points.size() && end - i > 1) {
      const ImagePoint& p = grid.points[first_ok];
      pts += fmt_svg(sx(p.image.real()));
      pts += ',';
      pts += fmt_svg(sy(p.image.imag()));
    }
    if (!pts.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << kPalette[ring % 6]
          << "\" stroke-width=\"1.2\" data-radius=\"" << fmt17(r) << "\" points=\"" << pts
          << "\"/>\n";
    }
    ++ring;
    i = end;
  }

  out << "<line id=\"bound-line\" x1=\"" << fmt_svg(sx(bound)) << "\" y1=\"0\" x2=\""
      << fmt_svg(sx(bound)) << "\" y2=\"600\" stroke=\"#d62728\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6 4\"/>\n";

  out << "<text x=\"10\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">" << info.name
      << " image, " << grid.points.size() << " samples (" << grid.flagged << " flagged)</text>\n";
  out << "<text x=\"10\" y=\"40\" font-family=\"sans-serif\" font-size=\"12\">claimed lower bound Re = "
      << info.claimed_bound.str() << " = " << fmt17(bound) << "</text>\n";
  if (grid.has_min)
    out << "<text x=\"10\" y=\"58\" font-family=\"sans-serif\" font-size=\"12\">sampled min Re = "
        << fmt17(grid.min_re) << "</text>\n";
  out << "</svg>\n";
}

void emit(const ImageGrid& grid, EmitFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  if (format == EmitFormat::kSvg)
    write_svg(grid, out);
  else
    write_csv(grid, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace dinikit::plot
