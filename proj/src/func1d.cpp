#include "pixrec/func1d.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "pixrec/errors.hpp"

namespace pixrec {

double Poly::eval(double x) const {
  double r = 0.0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Poly Poly::derivative() const {
  Poly d;
  if (c.size() <= 1) {
    d.c = {0.0};
    return d;
  }
  d.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * double(i);
  return d;
}

int Poly::degree() const {
  for (size_t i = c.size(); i-- > 0;)
    if (c[i] != 0.0) return int(i);
  return 0;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0.0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0.0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

namespace {

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  double fhi = f(hi);
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) != (fm < 0.0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// Roots of f on [lo, hi] given sorted interior monotonicity nodes.
std::vector<double> monotone_roots(const std::function<double(double)>& f,
                                   std::vector<double> nodes, double lo,
                                   double hi) {
  nodes.push_back(lo);
  nodes.push_back(hi);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<double> out;
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    double u = nodes[i], v = nodes[i + 1];
    if (v < lo || u > hi) continue;
    u = std::max(u, lo);
    v = std::min(v, hi);
    double fu = f(u), fv = f(v);
    if (fu == 0.0) out.push_back(u);
    if ((fu < 0.0 && fv > 0.0) || (fu > 0.0 && fv < 0.0))
      out.push_back(bisect_root(f, u, v));
    if (fv == 0.0 && i + 2 == nodes.size()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> poly_criticals(const Poly& p, double lo, double hi);

std::vector<double> poly_roots_impl(const Poly& p, double lo, double hi) {
  int deg = p.degree();
  if (deg == 0) return {};
  if (deg == 1) {
    double r = -p.c[0] / p.c[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  auto crit = poly_criticals(p, lo, hi);
  return monotone_roots([&p](double x) { return p.eval(x); }, crit, lo, hi);
}

std::vector<double> poly_criticals(const Poly& p, double lo, double hi) {
  return poly_roots_impl(p.derivative(), lo, hi);
}

}  // namespace

std::vector<double> Poly::roots(double lo, double hi) const {
  return poly_roots_impl(*this, lo, hi);
}

double PowerArc::eval(double x) const {
  double t = x - x0;
  if (t <= 0.0) return 0.0;
  return scale * std::pow(t, expo);
}

double PowerArc::deriv(double x) const {
  double t = x - x0;
  if (t <= 0.0) return expo > 1.0 ? 0.0 : (scale >= 0 ? HUGE_VAL : -HUGE_VAL);
  return scale * expo * std::pow(t, expo - 1.0);
}

Func1D::Func1D(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) fail("invalid-interval", "Func1D needs >= 1 piece");
  for (size_t i = 0; i < pieces_.size(); ++i) {
    if (!(pieces_[i].lo < pieces_[i].hi) && pieces_.size() > 1)
      fail("invalid-interval", "empty Func1D piece");
    if (i && pieces_[i].lo != pieces_[i - 1].hi)
      fail("invalid-interval", "Func1D pieces not contiguous");
  }
}

Func1D Func1D::constant(double y, double a, double b) {
  return Func1D({{a, b, Poly{{y}}}});
}

Func1D Func1D::linear(double ya, double yb, double a, double b) {
  double slope = (yb - ya) / (b - a);
  return Func1D({{a, b, Poly{{ya - slope * a, slope}}}});
}

Func1D Func1D::poly(Poly p, double a, double b) {
  return Func1D({{a, b, std::move(p)}});
}

namespace {
double piece_eval(const Func1D::Piece& pc, double x) {
  if (const Poly* p = std::get_if<Poly>(&pc.f)) return p->eval(x);
  return std::get<PowerArc>(pc.f).eval(x);
}
double piece_deriv(const Func1D::Piece& pc, double x) {
  if (const Poly* p = std::get_if<Poly>(&pc.f)) return p->derivative().eval(x);
  return std::get<PowerArc>(pc.f).deriv(x);
}
}  // namespace

double Func1D::eval(double x) const {
  x = std::min(std::max(x, a()), b());
  for (const auto& pc : pieces_)
    if (x <= pc.hi) return piece_eval(pc, x);
  return piece_eval(pieces_.back(), x);
}

double Func1D::deriv(double x) const {
  x = std::min(std::max(x, a()), b());
  for (const auto& pc : pieces_)
    if (x <= pc.hi) return piece_deriv(pc, x);
  return piece_deriv(pieces_.back(), x);
}

std::vector<double> Func1D::monotone_nodes(double lo, double hi) const {
  std::vector<double> out;
  for (const auto& pc : pieces_) {
    if (pc.hi < lo || pc.lo > hi) continue;
    if (pc.lo > lo) out.push_back(pc.lo);
    if (pc.hi < hi) out.push_back(pc.hi);
    double u = std::max(pc.lo, lo), v = std::min(pc.hi, hi);
    if (const Poly* p = std::get_if<Poly>(&pc.f)) {
      for (double r : p->derivative().roots(u, v)) out.push_back(r);
    }
    // PowerArc is strictly monotone on its domain.
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double Func1D::min_on(double lo, double hi) const {
  lo = std::max(lo, a());
  hi = std::min(hi, b());
  if (lo > hi) fail("invalid-interval", "min_on: empty interval");
  double m = std::min(eval(lo), eval(hi));
  for (double x : monotone_nodes(lo, hi)) m = std::min(m, eval(x));
  return m;
}

double Func1D::max_on(double lo, double hi) const {
  lo = std::max(lo, a());
  hi = std::min(hi, b());
  if (lo > hi) fail("invalid-interval", "max_on: empty interval");
  double m = std::max(eval(lo), eval(hi));
  for (double x : monotone_nodes(lo, hi)) m = std::max(m, eval(x));
  return m;
}

std::vector<double> Func1D::solve_deriv_eq(double slope, double lo,
                                           double hi) const {
  lo = std::max(lo, a());
  hi = std::min(hi, b());
  std::vector<double> out;
  for (const auto& pc : pieces_) {
    double u = std::max(pc.lo, lo), v = std::min(pc.hi, hi);
    if (u > v) continue;
    if (const Poly* p = std::get_if<Poly>(&pc.f)) {
      Poly d = p->derivative();
      d.c[0] -= slope;
      for (double r : d.roots(u, v)) out.push_back(r);
    } else {
      const PowerArc& pa = std::get<PowerArc>(pc.f);
      // scale*expo*(x-x0)^(expo-1) = slope
      double k = pa.scale * pa.expo;
      if (k != 0.0 && pa.expo != 1.0) {
        double ratio = slope / k;
        if (ratio > 0.0) {
          double t = std::pow(ratio, 1.0 / (pa.expo - 1.0));
          double x = pa.x0 + t;
          if (x >= u && x <= v) out.push_back(x);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {
const Poly& require_poly(const Func1D::Piece& pc) {
  const Poly* p = std::get_if<Poly>(&pc.f);
  if (!p) fail("invalid-interval", "operation requires polynomial pieces");
  return *p;
}

Func1D combine(const Func1D& f, const Func1D& g, double sign) {
  if (f.a() != g.a() || f.b() != g.b())
    fail("invalid-interval", "Func1D domains differ");
  std::vector<double> cuts{f.a(), f.b()};
  for (const auto& pc : f.pieces()) cuts.push_back(pc.hi);
  for (const auto& pc : g.pieces()) cuts.push_back(pc.hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Func1D::Piece> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const Poly* pf = nullptr;
    const Poly* pg = nullptr;
    for (const auto& pc : f.pieces())
      if (mid >= pc.lo && mid <= pc.hi) pf = &require_poly(pc);
    for (const auto& pc : g.pieces())
      if (mid >= pc.lo && mid <= pc.hi) pg = &require_poly(pc);
    Poly q = *pg;
    for (auto& cc : q.c) cc *= sign;
    out.push_back({cuts[i], cuts[i + 1], *pf + q});
  }
  return Func1D(std::move(out));
}
}  // namespace

Func1D operator-(const Func1D& f, const Func1D& g) { return combine(f, g, -1.0); }
Func1D operator+(const Func1D& f, const Func1D& g) { return combine(f, g, +1.0); }

std::vector<std::pair<double, double>> nonneg_set(const NodedFn& fn, double lo,
                                                  double hi) {
  std::vector<double> cuts = fn.nodes;
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.erase(std::remove_if(cuts.begin(), cuts.end(),
                            [&](double x) { return x < lo || x > hi; }),
             cuts.end());

  // Gather all sign-change boundaries.
  std::vector<double> marks;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double u = cuts[i], v = cuts[i + 1];
    double fu = fn.f(u), fv = fn.f(v);
    if ((fu < 0.0 && fv > 0.0) || (fu > 0.0 && fv < 0.0))
      marks.push_back(bisect_root(fn.f, u, v));
  }
  for (double c : cuts) marks.push_back(c);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  std::vector<std::pair<double, double>> out;
  bool open = false;
  double start = lo;
  for (size_t i = 0; i + 1 < marks.size(); ++i) {
    double mid = 0.5 * (marks[i] + marks[i + 1]);
    bool pos = fn.f(mid) >= 0.0;
    if (pos && !open) {
      start = fn.f(marks[i]) >= 0.0 ? marks[i] : marks[i];
      open = true;
    } else if (!pos && open) {
      out.emplace_back(start, marks[i]);
      open = false;
    }
  }
  if (open) out.emplace_back(start, marks.back());
  // Isolated zeros at marks surrounded by negative spans.
  for (double m : marks) {
    if (fn.f(m) < 0.0) continue;
    bool covered = false;
    for (auto& iv : out)
      if (m >= iv.first && m <= iv.second) covered = true;
    if (!covered) out.emplace_back(m, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count_interval_components(std::vector<std::pair<double, double>> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  int n = 1;
  double hi = v[0].second;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i].first > hi)
      ++n;
    hi = std::max(hi, v[i].second);
  }
  return n;
}

std::vector<std::pair<double, double>> intersect_interval_sets(
    const std::vector<std::pair<double, double>>& a,
    const std::vector<std::pair<double, double>>& b) {
  std::vector<std::pair<double, double>> out;
  for (const auto& ia : a)
    for (const auto& ib : b) {
      double lo = std::max(ia.first, ib.first);
      double hi = std::min(ia.second, ib.second);
      if (lo <= hi) out.emplace_back(lo, hi);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pixrec
