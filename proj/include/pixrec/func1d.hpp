#ifndef PIXREC_FUNC1D_HPP
#define PIXREC_FUNC1D_HPP

#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace pixrec {

// Dense polynomial c[0] + c[1] x + c[2] x^2 + ...
struct Poly {
  std::vector<double> c;

  double eval(double x) const;
  Poly derivative() const;
  int degree() const;
  // Real roots inside [lo, hi], ascending, found on monotone subintervals.
  std::vector<double> roots(double lo, double hi) const;

  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator+(const Poly& a, const Poly& b);
};

// scale * (x - x0)^expo for x >= x0 (expo > 0, possibly fractional).
struct PowerArc {
  double scale = 1.0;
  double x0 = 0.0;
  double expo = 1.0;

  double eval(double x) const;
  double deriv(double x) const;
};

// Continuous piecewise function over a compact interval. Pieces are
// contiguous; each is a polynomial or a fractional-power arc.
class Func1D {
public:
  struct Piece {
    double lo, hi;
    std::variant<Poly, PowerArc> f;
  };

  Func1D() = default;
  explicit Func1D(std::vector<Piece> pieces);

  static Func1D constant(double y, double a, double b);
  static Func1D linear(double y_at_a, double y_at_b, double a, double b);
  static Func1D poly(Poly p, double a, double b);

  double a() const { return pieces_.front().lo; }
  double b() const { return pieces_.back().hi; }
  bool empty() const { return pieces_.empty(); }
  const std::vector<Piece>& pieces() const { return pieces_; }

  double eval(double x) const;   // x clamped into [a, b]
  double deriv(double x) const;  // one-sided at piece joints

  // x-locations where monotonicity may change inside (lo, hi):
  // piece joints plus interior zeros of the derivative.
  std::vector<double> monotone_nodes(double lo, double hi) const;

  double min_on(double lo, double hi) const;
  double max_on(double lo, double hi) const;

  // Solutions of f'(x) = slope in [lo, hi] (one per monotone span).
  std::vector<double> solve_deriv_eq(double slope, double lo, double hi) const;

  // Pointwise difference; both operands must be piecewise polynomial.
  friend Func1D operator-(const Func1D& f, const Func1D& g);
  friend Func1D operator+(const Func1D& f, const Func1D& g);

private:
  std::vector<Piece> pieces_;
};

// A scalar function with known smoothness breaks, for root isolation.
struct NodedFn {
  std::function<double(double)> f;
  std::vector<double> nodes;  // candidate monotonicity breaks
};

// Maximal closed subintervals of [lo, hi] where fn >= 0. Roots are refined
// by bisection on monotone spans; degenerate (point) components kept.
std::vector<std::pair<double, double>> nonneg_set(const NodedFn& fn, double lo,
                                                  double hi);

// Components of the intersection of two families of disjoint closed
// intervals (used for chi of clipped elementary regions).
int count_interval_components(std::vector<std::pair<double, double>> v);

std::vector<std::pair<double, double>> intersect_interval_sets(
    const std::vector<std::pair<double, double>>& a,
    const std::vector<std::pair<double, double>>& b);

}  // namespace pixrec

#endif
