#ifndef PIXREC_SHAPES_HPP
#define PIXREC_SHAPES_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pixrec/func1d.hpp"
#include "pixrec/geometry.hpp"

#include "json.hpp"

namespace pixrec {

struct DiskRegion {
  Point c;
  double r;
};
struct CircleCurve {
  Point c;
  double r;
};
struct AnnulusRegion {
  Point c;
  double r_in, r_out;
};
struct EllipseRegion {
  Point c;
  double a, b;
};
struct SegmentShape {
  Point p, q;
};
// Region between two continuous functions beta <= tau over a shared
// interval; degenerate (beta == tau) encodes a curve given as a graph.
struct ElementaryRegion {
  Func1D beta, tau;
};
struct ImplicitRegion {
  std::function<bool(Point)> member;
  Box bounds;
};

using Primitive = std::variant<DiskRegion, CircleCurve, AnnulusRegion,
                               EllipseRegion, SegmentShape, ElementaryRegion,
                               ImplicitRegion>;

// n(x) = number of components of the vertical-line section, as a step
// function: value(i) holds on the open interval (knot[i-1], knot[i]).
struct StepFunction {
  std::vector<double> knots;
  std::vector<int> values;  // size == knots.size() + 1
  int at(double x) const;
};

struct GroundTruth {
  double boundary_length = std::numeric_limits<double>::quiet_NaN();
  double total_curvature = std::numeric_limits<double>::quiet_NaN();
  int b0 = 1, b1 = 0, chi = 1;
  std::vector<double> jump_set;   // discontinuities of the component counter
  StepFunction counter;           // the component counter away from jumps
  double kappa0 = 0.5;            // separation exponent used for this shape
  double nu0 = std::numeric_limits<double>::quiet_NaN();    // frozen fit
  bool kappa0_empirical = false;  // true when calibrated, not derived
};

struct ShapeSpec {
  std::string name;
  std::vector<Primitive> parts;
  GroundTruth truth;
  bool generic = true;        // satisfies the genericity assumptions
  bool exact_touch = true;    // touch test is exact (implicit parts are not)

  Box bounds() const;
};

// Exact closed-square intersection tests (tangency counts as touching).
bool touches(const Primitive& prim, const Box& square);
bool touches(const ShapeSpec& shape, const Box& square);

// Pointwise membership (used by the supersampling fallback and tests).
bool member(const Primitive& prim, Point p);
bool member(const ShapeSpec& shape, Point p);

// Number of components of shape ∩ {x = x0}, from the analytic description.
int component_counter(const ShapeSpec& shape, double x0);

// Range of xi·p over the shape (support interval).
std::pair<double, double> xi_range(const ShapeSpec& shape, Point xi);

// Offsets c at which {xi = c} is tangent to the boundary or passes
// through a corner; used to classify near-tangent half-plane samples.
std::vector<double> critical_offsets(const ShapeSpec& shape, Point xi);

// chi(shape ∩ {xi·p >= c}) computed analytically (independent oracle).
int half_plane_chi_oracle(const ShapeSpec& shape, Point xi, double c);

// Parametrized boundary arc for inscribed-polygon sampling.
struct ArcSampler {
  std::function<Point(double)> at;
  double t0 = 0.0, t1 = 1.0;
  bool closed = false;
};

ArcSampler ellipse_arc(double a, double b);
ArcSampler circle_arc(double r);
ArcSampler segment_arc(Point p, Point q);

// Arc length by adaptive Simpson quadrature on |gamma'| to ~1e-12.
double arc_length_quadrature(const std::function<Point(double)>& gamma,
                             double t0, double t1);

const std::vector<ShapeSpec>& corpus();
const ShapeSpec& corpus_shape(const std::string& name);

nlohmann::json corpus_manifest();

}  // namespace pixrec

#endif
