#ifndef PIXREC_GRID_HPP
#define PIXREC_GRID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pixrec/geometry.hpp"
#include "pixrec/shapes.hpp"

namespace pixrec {

// Pixel (i,j) is the closed square [(i-1)e, ie] x [(j-1)e, je];
// its center is (ie - e/2, je - e/2).
Point pixel_center(long long i, long long j, double eps);

struct GridSpec {
  double epsilon = 1.0;
  // Inclusive lattice index ranges of the working box.
  long long i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;

  int cols() const { return int(i_hi - i_lo + 1); }
  int rows() const { return int(j_hi - j_lo + 1); }
  Box pixel_box(long long i, long long j) const {
    return {(i - 1) * epsilon, (j - 1) * epsilon, i * epsilon, j * epsilon};
  }
};

class Pixelation {
public:
  Pixelation() = default;
  Pixelation(GridSpec spec, bool approximate = false);

  const GridSpec& spec() const { return spec_; }
  bool approximate_raster() const { return approximate_; }

  bool occupied(long long i, long long j) const;
  void set(long long i, long long j, bool v = true);
  size_t count() const;
  bool empty() const { return count() == 0; }

  // Occupancy of lattice column i over the full j range, increasing j.
  std::vector<uint8_t> column_bits_at(long long i) const;

  // 1-based matrix view used by the scanning layer: column k in [1, m]
  // is lattice column i_lo + k - 1, row r in [1, h] is j_lo + r - 1.
  int m() const { return spec_.cols(); }
  int h() const { return spec_.rows(); }
  const uint8_t* column_data(int k) const;  // h() entries for matrix column k
  Point matrix_center(int k, int r) const;

  friend bool operator==(const Pixelation& a, const Pixelation& b);

private:
  GridSpec spec_;
  std::vector<uint8_t> bits_;  // column-major
  bool approximate_ = false;
};

// Occupancy of lattice column i in increasing j (spec'd accessor).
std::vector<uint8_t> column_bits(const Pixelation& p, long long i);

// Exact rasterization: pixel occupied iff the closed square meets the
// shape. The working box covers the shape with one pixel of margin.
Pixelation rasterize(const ShapeSpec& shape, double eps);

// k x k membership supersampling on the (k+1)^2 corner lattice of each
// pixel; result is flagged approximate. Fallback for implicit shapes.
Pixelation rasterize_supersampled(const ShapeSpec& shape, double eps, int k = 8);

struct CubicalMeasures {
  long long vertices = 0, edges = 0, faces = 0;
  long long chi = 0;
  long long b0 = 0, b1 = 0;
};

// V - E + F of the union of closed squares; b0 with corner contact
// connecting (8-connectivity); b1 = b0 - chi.
CubicalMeasures cubical_measures(const Pixelation& p);

// Plain PBM (P1) plus JSON sidecar {epsilon, i_offset, j_offset};
// row 1 of the PBM is the highest j. Round trip is bit exact.
void write_pbm(const Pixelation& p, const std::string& pbm_path,
               const std::string& json_path);
Pixelation read_pbm(const std::string& pbm_path, const std::string& json_path);

}  // namespace pixrec

#endif
