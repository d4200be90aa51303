#include "pixrec/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pixrec/errors.hpp"

namespace pixrec {

namespace {

constexpr double kPi = std::numbers::pi;

struct Overload {
  template <class... F>
  struct set : F... {
    using F::operator()...;
  };
};
template <class... F>
auto visit_prim(const Primitive& p, F&&... f) {
  struct V : std::decay_t<F>... {
    using std::decay_t<F>::operator()...;
  };
  return std::visit(V{std::forward<F>(f)...}, p);
}

Box prim_bounds(const Primitive& prim) {
  return visit_prim(
      prim,
      [](const DiskRegion& d) {
        return Box{d.c.x - d.r, d.c.y - d.r, d.c.x + d.r, d.c.y + d.r};
      },
      [](const CircleCurve& d) {
        return Box{d.c.x - d.r, d.c.y - d.r, d.c.x + d.r, d.c.y + d.r};
      },
      [](const AnnulusRegion& a) {
        return Box{a.c.x - a.r_out, a.c.y - a.r_out, a.c.x + a.r_out,
                   a.c.y + a.r_out};
      },
      [](const EllipseRegion& e) {
        return Box{e.c.x - e.a, e.c.y - e.b, e.c.x + e.a, e.c.y + e.b};
      },
      [](const SegmentShape& s) {
        return Box{std::min(s.p.x, s.q.x), std::min(s.p.y, s.q.y),
                   std::max(s.p.x, s.q.x), std::max(s.p.y, s.q.y)};
      },
      [](const ElementaryRegion& e) {
        double a = e.beta.a(), b = e.beta.b();
        return Box{a, e.beta.min_on(a, b), b, e.tau.max_on(a, b)};
      },
      [](const ImplicitRegion& r) { return r.bounds; });
}

// Closed y-sections of a primitive over the vertical line {x = x0}.
std::vector<std::pair<double, double>> sections_at(const Primitive& prim,
                                                   double x0) {
  using IV = std::pair<double, double>;
  return visit_prim(
      prim,
      [&](const DiskRegion& d) -> std::vector<IV> {
        double dx = x0 - d.c.x;
        if (dx * dx > d.r * d.r) return {};
        double h = std::sqrt(d.r * d.r - dx * dx);
        return {{d.c.y - h, d.c.y + h}};
      },
      [&](const CircleCurve& cc) -> std::vector<IV> {
        double dx = x0 - cc.c.x;
        double rr = cc.r * cc.r;
        if (dx * dx > rr) return {};
        if (dx * dx == rr) return {{cc.c.y, cc.c.y}};
        double h = std::sqrt(rr - dx * dx);
        return {{cc.c.y - h, cc.c.y - h}, {cc.c.y + h, cc.c.y + h}};
      },
      [&](const AnnulusRegion& an) -> std::vector<IV> {
        double dx = x0 - an.c.x;
        double d2 = dx * dx;
        if (d2 > an.r_out * an.r_out) return {};
        double ho = std::sqrt(an.r_out * an.r_out - d2);
        if (d2 >= an.r_in * an.r_in) return {{an.c.y - ho, an.c.y + ho}};
        double hi = std::sqrt(an.r_in * an.r_in - d2);
        return {{an.c.y - ho, an.c.y - hi}, {an.c.y + hi, an.c.y + ho}};
      },
      [&](const EllipseRegion& e) -> std::vector<IV> {
        double t = (x0 - e.c.x) / e.a;
        if (t * t > 1.0) return {};
        double h = e.b * std::sqrt(1.0 - t * t);
        return {{e.c.y - h, e.c.y + h}};
      },
      [&](const SegmentShape& s) -> std::vector<IV> {
        double xmin = std::min(s.p.x, s.q.x), xmax = std::max(s.p.x, s.q.x);
        if (x0 < xmin || x0 > xmax) return {};
        if (s.p.x == s.q.x)
          return {{std::min(s.p.y, s.q.y), std::max(s.p.y, s.q.y)}};
        double t = (x0 - s.p.x) / (s.q.x - s.p.x);
        double y = s.p.y + t * (s.q.y - s.p.y);
        return {{y, y}};
      },
      [&](const ElementaryRegion& e) -> std::vector<IV> {
        if (x0 < e.beta.a() || x0 > e.beta.b()) return {};
        return {{e.beta.eval(x0), e.tau.eval(x0)}};
      },
      [&](const ImplicitRegion&) -> std::vector<IV> {
        fail("unsupported", "implicit shapes have no analytic sections");
        return {};
      });
}

std::vector<std::pair<double, double>> merged_sections(const ShapeSpec& shape,
                                                       double x0) {
  std::vector<std::pair<double, double>> all;
  for (const auto& p : shape.parts)
    for (auto iv : sections_at(p, x0)) all.push_back(iv);
  std::sort(all.begin(), all.end());
  std::vector<std::pair<double, double>> merged;
  for (auto iv : all) {
    if (!merged.empty() && iv.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, iv.second);
    else
      merged.push_back(iv);
  }
  return merged;
}

}  // namespace

int StepFunction::at(double x) const {
  size_t i = std::upper_bound(knots.begin(), knots.end(), x) - knots.begin();
  return values[i];
}

Box ShapeSpec::bounds() const {
  Box b = prim_bounds(parts.front());
  for (size_t i = 1; i < parts.size(); ++i)
    b = box_union(b, prim_bounds(parts[i]));
  return b;
}

bool touches(const Primitive& prim, const Box& sq) {
  return visit_prim(
      prim,
      [&](const DiskRegion& d) { return box_dist2(sq, d.c) <= d.r * d.r; },
      [&](const CircleCurve& cc) {
        return box_dist2(sq, cc.c) <= cc.r * cc.r &&
               box_maxdist2(sq, cc.c) >= cc.r * cc.r;
      },
      [&](const AnnulusRegion& an) {
        return box_dist2(sq, an.c) <= an.r_out * an.r_out &&
               box_maxdist2(sq, an.c) >= an.r_in * an.r_in;
      },
      [&](const EllipseRegion& e) {
        double nx = (clamp(e.c.x, sq.x0, sq.x1) - e.c.x) / e.a;
        double ny = (clamp(e.c.y, sq.y0, sq.y1) - e.c.y) / e.b;
        return nx * nx + ny * ny <= 1.0;
      },
      [&](const SegmentShape& s) { return segment_meets_box(s.p, s.q, sq); },
      [&](const ElementaryRegion& e) {
        double lo = std::max(sq.x0, e.beta.a());
        double hi = std::min(sq.x1, e.beta.b());
        if (lo > hi) return false;
        // The band {beta <= y <= tau} meets the square iff the band dips
        // below the top and rises above the bottom somewhere on [lo, hi]
        // (intermediate value argument on the continuous bounds).
        return e.beta.min_on(lo, hi) <= sq.y1 && e.tau.max_on(lo, hi) >= sq.y0;
      },
      [&](const ImplicitRegion&) {
        fail("unsupported", "implicit shapes require supersampled rasterization");
        return false;
      });
}

bool touches(const ShapeSpec& shape, const Box& sq) {
  for (const auto& p : shape.parts)
    if (touches(p, sq)) return true;
  return false;
}

bool member(const Primitive& prim, Point pt) {
  return visit_prim(
      prim,
      [&](const DiskRegion& d) { return norm2(pt - d.c) <= d.r * d.r; },
      [&](const CircleCurve& cc) { return norm2(pt - cc.c) == cc.r * cc.r; },
      [&](const AnnulusRegion& an) {
        double d2 = norm2(pt - an.c);
        return d2 >= an.r_in * an.r_in && d2 <= an.r_out * an.r_out;
      },
      [&](const EllipseRegion& e) {
        double nx = (pt.x - e.c.x) / e.a, ny = (pt.y - e.c.y) / e.b;
        return nx * nx + ny * ny <= 1.0;
      },
      [&](const SegmentShape& s) {
        if (cross(s.q - s.p, pt - s.p) != 0.0) return false;
        double t = dot(s.q - s.p, pt - s.p);
        return t >= 0.0 && t <= norm2(s.q - s.p);
      },
      [&](const ElementaryRegion& e) {
        if (pt.x < e.beta.a() || pt.x > e.beta.b()) return false;
        return e.beta.eval(pt.x) <= pt.y && pt.y <= e.tau.eval(pt.x);
      },
      [&](const ImplicitRegion& r) { return r.member(pt); });
}

bool member(const ShapeSpec& shape, Point pt) {
  for (const auto& p : shape.parts)
    if (member(p, pt)) return true;
  return false;
}

int component_counter(const ShapeSpec& shape, double x0) {
  return int(merged_sections(shape, x0).size());
}

namespace {

// Extrema of g(x) = u*x + v*f(x) over [lo, hi].
std::pair<double, double> graph_xi_range(const Func1D& f, double u, double v,
                                         double lo, double hi) {
  auto g = [&](double x) { return u * x + v * f.eval(x); };
  double mn = std::min(g(lo), g(hi)), mx = std::max(g(lo), g(hi));
  std::vector<double> cand;
  for (const auto& pc : f.pieces()) {
    if (pc.lo > lo && pc.lo < hi) cand.push_back(pc.lo);
    if (pc.hi > lo && pc.hi < hi) cand.push_back(pc.hi);
  }
  if (v != 0.0)
    for (double x : f.solve_deriv_eq(-u / v, lo, hi)) cand.push_back(x);
  for (double x : cand) {
    mn = std::min(mn, g(x));
    mx = std::max(mx, g(x));
  }
  return {mn, mx};
}

std::pair<double, double> prim_xi_range(const Primitive& prim, Point xi) {
  double u = xi.x, v = xi.y;
  double nxi = norm(xi);
  return visit_prim(
      prim,
      [&](const DiskRegion& d) -> std::pair<double, double> {
        double c = dot(xi, d.c);
        return {c - d.r * nxi, c + d.r * nxi};
      },
      [&](const CircleCurve& cc) -> std::pair<double, double> {
        double c = dot(xi, cc.c);
        return {c - cc.r * nxi, c + cc.r * nxi};
      },
      [&](const AnnulusRegion& an) -> std::pair<double, double> {
        double c = dot(xi, an.c);
        return {c - an.r_out * nxi, c + an.r_out * nxi};
      },
      [&](const EllipseRegion& e) -> std::pair<double, double> {
        double c = dot(xi, e.c);
        double h = std::hypot(u * e.a, v * e.b);
        return {c - h, c + h};
      },
      [&](const SegmentShape& s) -> std::pair<double, double> {
        double a = dot(xi, s.p), b = dot(xi, s.q);
        return {std::min(a, b), std::max(a, b)};
      },
      [&](const ElementaryRegion& e) -> std::pair<double, double> {
        auto rb = graph_xi_range(e.beta, u, v, e.beta.a(), e.beta.b());
        auto rt = graph_xi_range(e.tau, u, v, e.tau.a(), e.tau.b());
        return {std::min(rb.first, rt.first), std::max(rb.second, rt.second)};
      },
      [&](const ImplicitRegion&) -> std::pair<double, double> {
        fail("unsupported", "implicit shapes have no analytic support");
        return {0, 0};
      });
}

std::vector<Point> segment_intersections(const ShapeSpec& shape) {
  std::vector<Point> pts;
  for (size_t i = 0; i < shape.parts.size(); ++i)
    for (size_t j = i + 1; j < shape.parts.size(); ++j) {
      const auto* a = std::get_if<SegmentShape>(&shape.parts[i]);
      const auto* b = std::get_if<SegmentShape>(&shape.parts[j]);
      if (!a || !b) continue;
      Point r = a->q - a->p, s = b->q - b->p;
      double den = cross(r, s);
      if (den == 0.0) continue;
      double t = cross(b->p - a->p, s) / den;
      double w = cross(b->p - a->p, r) / den;
      if (t >= 0.0 && t <= 1.0 && w >= 0.0 && w <= 1.0)
        pts.push_back(a->p + t * r);
    }
  return pts;
}

}  // namespace

std::pair<double, double> xi_range(const ShapeSpec& shape, Point xi) {
  auto r = prim_xi_range(shape.parts.front(), xi);
  for (size_t i = 1; i < shape.parts.size(); ++i) {
    auto q = prim_xi_range(shape.parts[i], xi);
    r.first = std::min(r.first, q.first);
    r.second = std::max(r.second, q.second);
  }
  return r;
}

std::vector<double> critical_offsets(const ShapeSpec& shape, Point xi) {
  double u = xi.x, v = xi.y;
  std::vector<double> out;
  auto add_graph = [&](const Func1D& f) {
    auto g = [&](double x) { return u * x + v * f.eval(x); };
    out.push_back(g(f.a()));
    out.push_back(g(f.b()));
    for (const auto& pc : f.pieces()) {
      out.push_back(g(pc.lo));
      out.push_back(g(pc.hi));
    }
    if (v != 0.0)
      for (double x : f.solve_deriv_eq(-u / v, f.a(), f.b()))
        out.push_back(g(x));
  };
  for (const auto& prim : shape.parts) {
    visit_prim(
        prim,
        [&](const DiskRegion& d) {
          double c = dot(xi, d.c), h = d.r * norm(xi);
          out.push_back(c - h);
          out.push_back(c + h);
        },
        [&](const CircleCurve& cc) {
          double c = dot(xi, cc.c), h = cc.r * norm(xi);
          out.push_back(c - h);
          out.push_back(c + h);
        },
        [&](const AnnulusRegion& an) {
          double c = dot(xi, an.c);
          for (double r : {an.r_in, an.r_out}) {
            out.push_back(c - r * norm(xi));
            out.push_back(c + r * norm(xi));
          }
        },
        [&](const EllipseRegion& e) {
          double c = dot(xi, e.c), h = std::hypot(u * e.a, v * e.b);
          out.push_back(c - h);
          out.push_back(c + h);
        },
        [&](const SegmentShape& s) {
          out.push_back(dot(xi, s.p));
          out.push_back(dot(xi, s.q));
        },
        [&](const ElementaryRegion& e) {
          add_graph(e.beta);
          add_graph(e.tau);
        },
        [&](const ImplicitRegion&) {});
  }
  for (Point p : segment_intersections(shape)) out.push_back(dot(xi, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

int prim_half_plane_chi(const Primitive& prim, Point xi, double c) {
  double u = xi.x, v = xi.y;
  double nxi = norm(xi);
  auto count_graph_cross = [&](const Func1D& f, bool keep_above) {
    // Components of {x : tau(x) >= line(x)} (or line >= beta).
    NodedFn fn;
    double sgn = keep_above ? 1.0 : -1.0;
    fn.f = [&f, u, v, c, sgn](double x) {
      double line = (c - u * x) / v;
      return sgn * (f.eval(x) - line);
    };
    fn.nodes = f.monotone_nodes(f.a(), f.b());
    for (double x : f.solve_deriv_eq(-u / v, f.a(), f.b()))
      fn.nodes.push_back(x);
    return nonneg_set(fn, f.a(), f.b());
  };
  return visit_prim(
      prim,
      [&](const DiskRegion& d) {
        return dot(xi, d.c) + d.r * nxi >= c ? 1 : 0;
      },
      [&](const CircleCurve& cc) {
        double t = (c - dot(xi, cc.c)) / nxi;
        if (t > cc.r) return 0;   // cut away entirely
        if (t < -cc.r) return 0;  // whole circle, chi(S^1) = 0
        return 1;                 // one closed arc
      },
      [&](const AnnulusRegion& an) {
        double t = (c - dot(xi, an.c)) / nxi;
        if (t > an.r_out) return 0;
        if (t > -an.r_in) return 1;   // cap or hole-crossing slice
        return 0;                     // hole survives (or full annulus)
      },
      [&](const EllipseRegion& e) {
        return dot(xi, e.c) + std::hypot(u * e.a, v * e.b) >= c ? 1 : 0;
      },
      [&](const SegmentShape& s) {
        return std::max(dot(xi, s.p), dot(xi, s.q)) >= c ? 1 : 0;
      },
      [&](const ElementaryRegion& e) {
        if (v == 0.0) fail("non-generic-line", "vertical half-plane boundary");
        // Sections clipped to the half-plane stay vertical segments, so each
        // component of the surviving x-set is contractible.
        auto comps = v > 0.0 ? count_graph_cross(e.tau, true)
                             : count_graph_cross(e.beta, false);
        return count_interval_components(comps);
      },
      [&](const ImplicitRegion&) {
        fail("unsupported", "implicit shapes have no analytic chi oracle");
        return 0;
      });
}

}  // namespace

int half_plane_chi_oracle(const ShapeSpec& shape, Point xi, double c) {
  int chi = 0;
  for (const auto& p : shape.parts) chi += prim_half_plane_chi(p, xi, c);
  if (shape.parts.size() > 1) {
    // Corpus unions overlap pairwise in at most one point.
    for (Point p : segment_intersections(shape))
      if (dot(xi, p) >= c) chi -= 1;
  }
  return chi;
}

ArcSampler ellipse_arc(double a, double b) {
  ArcSampler s;
  s.at = [a, b](double t) { return Point{a * std::cos(t), b * std::sin(t)}; };
  s.t0 = 0.0;
  s.t1 = 2.0 * kPi;
  s.closed = true;
  return s;
}

ArcSampler circle_arc(double r) { return ellipse_arc(r, r); }

ArcSampler segment_arc(Point p, Point q) {
  ArcSampler s;
  s.at = [p, q](double t) { return p + t * (q - p); };
  s.t0 = 0.0;
  s.t1 = 1.0;
  s.closed = false;
  return s;
}

namespace {
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tol,
               int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}
}  // namespace

double arc_length_quadrature(const std::function<Point(double)>& gamma,
                             double t0, double t1) {
  // Speed by high-order central difference; adaptive Simpson on top.
  auto speed = [&](double t) {
    double h = 1e-6 * (t1 - t0);
    Point a = gamma(t - 2 * h), b = gamma(t - h), c = gamma(t + h),
          d = gamma(t + 2 * h);
    Point dp = (1.0 / (12.0 * h)) * ((a - d) + 8.0 * (c - b));
    return norm(dp);
  };
  double fa = speed(t0), fb = speed(t1), fm = speed(0.5 * (t0 + t1));
  double whole = (t1 - t0) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(speed, t0, t1, fa, fm, fb, whole, 1e-12, 40);
}

namespace {

double graph_arc_length(const Func1D& f) {
  double total = 0.0;
  for (const auto& pc : f.pieces()) {
    auto speed = [&](double x) {
      double d;
      if (const Poly* p = std::get_if<Poly>(&pc.f))
        d = p->derivative().eval(x);
      else
        d = std::get<PowerArc>(pc.f).deriv(x);
      return std::sqrt(1.0 + d * d);
    };
    double fa = speed(pc.lo), fb = speed(pc.hi),
           fm = speed(0.5 * (pc.lo + pc.hi));
    double whole = (pc.hi - pc.lo) / 6.0 * (fa + 4.0 * fm + fb);
    total += simpson(speed, pc.lo, pc.hi, fa, fm, fb, whole, 1e-12, 40);
  }
  return total;
}

StepFunction counter_from_jumps(const ShapeSpec& partial,
                                const std::vector<double>& jumps) {
  StepFunction sf;
  sf.knots = jumps;
  sf.values.resize(jumps.size() + 1);
  if (jumps.empty()) {
    sf.values[0] = 0;
    return sf;
  }
  for (size_t i = 0; i + 1 <= jumps.size() + 1; ++i) {
    double x;
    if (i == 0)
      x = jumps.front() - 1.0;
    else if (i == jumps.size())
      x = jumps.back() + 1.0;
    else
      x = 0.5 * (jumps[i - 1] + jumps[i]);
    sf.values[i] = component_counter(partial, x);
  }
  return sf;
}

ShapeSpec make_shape(std::string name, std::vector<Primitive> parts,
                     std::vector<double> jumps, double length, double curv,
                     int b0, int b1, double kappa0, bool generic,
                     bool kappa0_empirical = false) {
  ShapeSpec s;
  s.name = std::move(name);
  s.parts = std::move(parts);
  s.generic = generic;
  s.truth.jump_set = jumps;
  s.truth.boundary_length = length;
  s.truth.total_curvature = curv;
  s.truth.b0 = b0;
  s.truth.b1 = b1;
  s.truth.chi = b0 - b1;
  s.truth.kappa0 = kappa0;
  s.truth.kappa0_empirical = kappa0_empirical;
  s.truth.counter = counter_from_jumps(s, jumps);
  return s;
}

// Frozen nu0 fits: max over eps in {2^-4 .. 2^-10} of
// dist_H(J_S, J_{S,eps}) / eps^kappa0, produced by `pixrec jumpscan`
// (tools/fit_nu0.sh) and pinned here.
struct Nu0Entry {
  const char* name;
  double nu0;
};
constexpr Nu0Entry kNu0Table[] = {
    {"disk", 0.375},      {"circle", 0.53125},  {"annulus", 0.8128},
    {"ellipse", 0.53033}, {"rect", 1.5},        {"angle", 1.6251},
    {"s1", 1.3752},       {"s2", 1.8127},       {"s3", 2.2501},
    {"mixed", 0.75},      {"cusp", 1.213},
};

std::vector<ShapeSpec> build_corpus() {
  std::vector<ShapeSpec> out;

  const double nan = std::numeric_limits<double>::quiet_NaN();

  out.push_back(make_shape("disk", {DiskRegion{{0, 0}, 1.0}}, {-1.0, 1.0},
                           2 * kPi, 2 * kPi, 1, 0, 0.5, true));

  // Thin annular limit of a curve: boundary quantities are doubled.
  out.push_back(make_shape("circle", {CircleCurve{{0, 0}, 1.0}}, {-1.0, 1.0},
                           4 * kPi, 4 * kPi, 1, 1, 0.5, true));

  out.push_back(make_shape("annulus", {AnnulusRegion{{0, 0}, 1.0, 2.0}},
                           {-2.0, -1.0, 1.0, 2.0}, 6 * kPi, 4 * kPi, 1, 1, 0.5,
                           true));

  {
    double len = arc_length_quadrature(
        [](double t) { return Point{2.0 * std::cos(t), std::sin(t)}; }, 0.0,
        2.0 * kPi);
    out.push_back(make_shape("ellipse", {EllipseRegion{{0, 0}, 2.0, 1.0}},
                             {-2.0, 2.0}, len, 2 * kPi, 1, 0, 0.5, true));
  }

  out.push_back(make_shape(
      "rect",
      {ElementaryRegion{Func1D::constant(0.0, 0.0, 1.0),
                        Func1D::constant(0.5, 0.0, 1.0)}},
      {0.0, 1.0}, 3.0, 2 * kPi, 1, 0, 1.0, true));

  {
    std::vector<Primitive> parts{SegmentShape{{0, 0}, {1, 1}},
                                 SegmentShape{{0, 0}, {1, 2.0 / 3.0}}};
    double len = 2.0 * (std::sqrt(2.0) + std::hypot(1.0, 2.0 / 3.0));
    out.push_back(make_shape("angle", std::move(parts), {0.0, 1.0}, len, nan,
                             1, 0, 1.0, true));
  }

  for (int n : {1, 2, 3}) {
    std::vector<Primitive> parts{
        SegmentShape{{0, 0}, {double(n), double(2 * n + 1)}},
        SegmentShape{{0, 0}, {1, 2}}};
    std::vector<double> jumps =
        n == 1 ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, 1.0, double(n)};
    double len = 2.0 * (std::hypot(double(n), double(2 * n + 1)) +
                        std::hypot(1.0, 2.0));
    out.push_back(make_shape("s" + std::to_string(n), std::move(parts), jumps,
                             len, nan, 1, 0, 1.0, true));
  }

  {
    // Mixed elementary set: degenerate on [-1, 0], opens to +-x^2 on [0, 1].
    Func1D beta({{-1.0, 0.0, Poly{{0.0}}}, {0.0, 1.0, Poly{{0.0, 0.0, -1.0}}}});
    Func1D tau({{-1.0, 0.0, Poly{{0.0}}}, {0.0, 1.0, Poly{{0.0, 0.0, 1.0}}}});
    double arc = graph_arc_length(Func1D::poly(Poly{{0.0, 0.0, 1.0}}, 0.0, 1.0));
    double len = 2.0 * 1.0 + 2.0 * arc + 2.0;
    double curv = 2.0 * kPi + 4.0 * std::atan(2.0);
    out.push_back(make_shape("mixed",
                             {ElementaryRegion{std::move(beta), std::move(tau)}},
                             {-1.0, 1.0}, len, curv, 1, 0, 0.5, true));
  }

  {
    // Cusp region y^2 <= x^3, x <= 1; kappa0 calibrated empirically.
    Func1D beta({{0.0, 1.0, PowerArc{-1.0, 0.0, 1.5}}});
    Func1D tau({{0.0, 1.0, PowerArc{1.0, 0.0, 1.5}}});
    double arc = graph_arc_length(tau);
    double len = 2.0 * arc + 2.0;
    double curv = 2.0 * kPi + 4.0 * std::atan(1.5);
    out.push_back(make_shape("cusp",
                             {ElementaryRegion{std::move(beta), std::move(tau)}},
                             {0.0, 1.0}, len, curv, 1, 0, 1.0 / 3.0, true,
                             true));
  }

  // Nongeneric negatives: vertical strata.
  out.push_back(make_shape("vbar", {SegmentShape{{0, 0}, {0, 1}}}, {0.0}, 2.0,
                           2 * kPi, 1, 0, 1.0, false));
  out.push_back(make_shape("plus",
                           {SegmentShape{{0, -0.5}, {0, 0.5}},
                            SegmentShape{{-0.5, 0}, {0.5, 0}}},
                           {-0.5, 0.5}, nan, nan, 1, 0, 1.0, false));

  for (auto& s : out)
    for (const auto& e : kNu0Table)
      if (s.name == e.name) s.truth.nu0 = e.nu0;
  return out;
}

}  // namespace

const std::vector<ShapeSpec>& corpus() {
  static const std::vector<ShapeSpec> c = build_corpus();
  return c;
}

const ShapeSpec& corpus_shape(const std::string& name) {
  for (const auto& s : corpus())
    if (s.name == name) return s;
  fail("unknown-shape", "no corpus shape named '" + name + "'");
}

nlohmann::json corpus_manifest() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : corpus()) {
    nlohmann::json j;
    j["name"] = s.name;
    j["generic"] = s.generic;
    j["boundary_length"] = s.truth.boundary_length;
    j["total_curvature"] = s.truth.total_curvature;
    j["b0"] = s.truth.b0;
    j["b1"] = s.truth.b1;
    j["chi"] = s.truth.chi;
    j["jump_set"] = s.truth.jump_set;
    j["kappa0"] = s.truth.kappa0;
    j["kappa0_empirical"] = s.truth.kappa0_empirical;
    j["nu0"] = s.truth.nu0;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace pixrec
