#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dinikit/corollary.hpp"
#include "dinikit/verifier.hpp"

namespace dinikit::plot {

enum class PointFlag { kOk, kDenomNearZero, kNonFinite };
[[nodiscard]] const char* flag_name(PointFlag f);

struct ImagePoint {
  verify::SamplePoint src;
  Complex image{0.0, 0.0};  // zero when the evaluation threw
  PointFlag flag = PointFlag::kOk;
};

struct ImageGrid {
  dini::CorollaryFn fn = dini::CorollaryFn::kF1;
  verify::DiskSampling spec;
  std::vector<ImagePoint> points;  // sample_disk order: r-major, theta-minor
  bool has_min = false;
  double min_re = 0.0;  // over unflagged points, first hit wins ties
  verify::SamplePoint argmin{};
  long flagged = 0;
};

// Maps every sample through corollary_fn; singular or non-finite points are
// flagged and kept, never dropped. The minimum tracking follows the exact
// scan order and update rule of the verifier, so the two agree bit-for-bit.
[[nodiscard]] ImageGrid image_domain(dini::CorollaryFn fn, const verify::DiskSampling& spec);

// Boundary-circle radii {0.25, 0.5, 0.75, 0.999} at 200 angles.
[[nodiscard]] verify::DiskSampling default_figure_spec();

// CSV: header src_re,src_im,img_re,img_im,flag; %.17g fields, LF endings.
void write_csv(const ImageGrid& grid, std::ostream& out);
// SVG 1.1: one closed polyline per radius, vertical line at Re = claimed
// bound, viewport fitted to the data extent.
void write_svg(const ImageGrid& grid, std::ostream& out);

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class EmitFormat { kSvg, kCsv };
void emit(const ImageGrid& grid, EmitFormat format, const std::string& path);

}  // namespace dinikit::plot
