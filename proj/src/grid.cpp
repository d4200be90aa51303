#include "pixrec/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "pixrec/errors.hpp"

namespace pixrec {

namespace {
constexpr long long kMaxCells = 1LL << 28;  // ~268M pixels
}

Point pixel_center(long long i, long long j, double eps) {
  if (!(eps > 0.0)) fail("invalid-resolution", "eps must be positive");
  return {i * eps - eps / 2.0, j * eps - eps / 2.0};
}

Pixelation::Pixelation(GridSpec spec, bool approximate)
    : spec_(spec), approximate_(approximate) {
  if (spec_.i_hi < spec_.i_lo || spec_.j_hi < spec_.j_lo)
    fail("invalid-interval", "empty grid ranges");
  long long cells = (long long)spec_.cols() * spec_.rows();
  if (cells > kMaxCells) fail("grid-too-large", "working box exceeds cell cap");
  bits_.assign(size_t(cells), 0);
}

bool Pixelation::occupied(long long i, long long j) const {
  if (i < spec_.i_lo || i > spec_.i_hi || j < spec_.j_lo || j > spec_.j_hi)
    return false;
  return bits_[size_t((i - spec_.i_lo) * spec_.rows() + (j - spec_.j_lo))] != 0;
}

void Pixelation::set(long long i, long long j, bool v) {
  if (i < spec_.i_lo || i > spec_.i_hi || j < spec_.j_lo || j > spec_.j_hi)
    fail("index-error", "pixel index outside grid");
  bits_[size_t((i - spec_.i_lo) * spec_.rows() + (j - spec_.j_lo))] = v ? 1 : 0;
}

size_t Pixelation::count() const {
  return size_t(std::accumulate(bits_.begin(), bits_.end(), 0LL));
}

std::vector<uint8_t> Pixelation::column_bits_at(long long i) const {
  if (i < spec_.i_lo || i > spec_.i_hi)
    fail("index-error", "column index outside grid");
  const uint8_t* base = &bits_[size_t((i - spec_.i_lo) * spec_.rows())];
  return std::vector<uint8_t>(base, base + spec_.rows());
}

const uint8_t* Pixelation::column_data(int k) const {
  if (k < 1 || k > m()) fail("index-error", "matrix column outside [1, m]");
  return &bits_[size_t((k - 1) * spec_.rows())];
}

Point Pixelation::matrix_center(int k, int r) const {
  return pixel_center(spec_.i_lo + k - 1, spec_.j_lo + r - 1, spec_.epsilon);
}

bool operator==(const Pixelation& a, const Pixelation& b) {
  return a.spec_.epsilon == b.spec_.epsilon && a.spec_.i_lo == b.spec_.i_lo &&
         a.spec_.i_hi == b.spec_.i_hi && a.spec_.j_lo == b.spec_.j_lo &&
         a.spec_.j_hi == b.spec_.j_hi && a.bits_ == b.bits_;
}

std::vector<uint8_t> column_bits(const Pixelation& p, long long i) {
  return p.column_bits_at(i);
}

namespace {

GridSpec working_box(const ShapeSpec& shape, double eps) {
  if (!(eps > 0.0)) fail("invalid-resolution", "eps must be positive");
  Box bb = shape.bounds();
  if (!std::isfinite(bb.x0) || !std::isfinite(bb.x1) || !std::isfinite(bb.y0) ||
      !std::isfinite(bb.y1))
    fail("unbounded-shape", "shape bounding box is not finite");
  GridSpec g;
  g.epsilon = eps;
  // Pixels possibly touching [x0,x1] have i in [floor(x0/e), floor(x1/e)+1];
  // pad by one so the outermost rows/columns are guaranteed empty.
  g.i_lo = (long long)std::floor(bb.x0 / eps) - 1;
  g.i_hi = (long long)std::floor(bb.x1 / eps) + 2;
  g.j_lo = (long long)std::floor(bb.y0 / eps) - 1;
  g.j_hi = (long long)std::floor(bb.y1 / eps) + 2;
  return g;
}

}  // namespace

Pixelation rasterize(const ShapeSpec& shape, double eps) {
  Pixelation out(working_box(shape, eps));
  const GridSpec& g = out.spec();
  for (const auto& prim : shape.parts) {
    if (std::holds_alternative<ImplicitRegion>(prim))
      fail("unsupported", "use rasterize_supersampled for implicit shapes");
    Box pb = std::visit([](const auto&) { return Box{}; }, prim);
    (void)pb;
  }
  for (long long i = g.i_lo; i <= g.i_hi; ++i)
    for (long long j = g.j_lo; j <= g.j_hi; ++j)
      if (touches(shape, g.pixel_box(i, j))) out.set(i, j);
  return out;
}

Pixelation rasterize_supersampled(const ShapeSpec& shape, double eps, int k) {
  if (k < 1) fail("invalid-interval", "supersample factor must be >= 1");
  Pixelation out(working_box(shape, eps), /*approximate=*/true);
  const GridSpec& g = out.spec();
  for (long long i = g.i_lo; i <= g.i_hi; ++i)
    for (long long j = g.j_lo; j <= g.j_hi; ++j) {
      Box b = g.pixel_box(i, j);
      bool hit = false;
      for (int a = 0; a <= k && !hit; ++a)
        for (int c = 0; c <= k && !hit; ++c) {
          Point pt{b.x0 + (b.x1 - b.x0) * a / k, b.y0 + (b.y1 - b.y0) * c / k};
          hit = member(shape, pt);
        }
      if (hit) out.set(i, j);
    }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CubicalMeasures cubical_measures(const Pixelation& p) {
  const GridSpec& g = p.spec();
  const int m = g.cols(), h = g.rows();
  CubicalMeasures out;

  // Lattice vertex / edge grids of the union of closed squares.
  std::vector<uint8_t> vert((m + 1) * (h + 1), 0);
  std::vector<uint8_t> hedge(m * (h + 1), 0);  // horizontal unit edges
  std::vector<uint8_t> vedge((m + 1) * h, 0);  // vertical unit edges
  auto vid = [&](int a, int b) { return a * (h + 1) + b; };

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < h; ++b) {
      if (!p.occupied(g.i_lo + a, g.j_lo + b)) continue;
      ++out.faces;
      vert[vid(a, b)] = vert[vid(a + 1, b)] = vert[vid(a, b + 1)] =
          vert[vid(a + 1, b + 1)] = 1;
      hedge[a * (h + 1) + b] = hedge[a * (h + 1) + b + 1] = 1;
      vedge[a * h + b] = vedge[(a + 1) * h + b] = 1;
    }
  out.vertices = std::accumulate(vert.begin(), vert.end(), 0LL);
  out.edges = std::accumulate(hedge.begin(), hedge.end(), 0LL) +
              std::accumulate(vedge.begin(), vedge.end(), 0LL);
  out.chi = out.vertices - out.edges + out.faces;

  // Components of the closed union: corner contact connects.
  UnionFind uf(size_t(m) * h);
  auto cid = [&](int a, int b) { return a * h + b; };
  long long occ = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < h; ++b) {
      if (!p.occupied(g.i_lo + a, g.j_lo + b)) continue;
      ++occ;
      static const int da[4] = {-1, -1, -1, 0};
      static const int db[4] = {-1, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        int na = a + da[d], nb = b + db[d];
        if (na < 0 || nb < 0 || nb >= h) continue;
        if (p.occupied(g.i_lo + na, g.j_lo + nb)) uf.unite(cid(a, b), cid(na, nb));
      }
    }
  std::vector<int> roots;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < h; ++b)
      if (p.occupied(g.i_lo + a, g.j_lo + b)) roots.push_back(uf.find(cid(a, b)));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  out.b0 = (long long)roots.size();
  out.b1 = out.b0 - out.chi;
  return out;
}

void write_pbm(const Pixelation& p, const std::string& pbm_path,
               const std::string& json_path) {
  const GridSpec& g = p.spec();
  std::ofstream f(pbm_path);
  if (!f) fail("io-error", "cannot open " + pbm_path);
  f << "P1\n" << g.cols() << " " << g.rows() << "\n";
  for (long long j = g.j_hi; j >= g.j_lo; --j) {
    for (long long i = g.i_lo; i <= g.i_hi; ++i) {
      f << (p.occupied(i, j) ? '1' : '0');
      f << (i == g.i_hi ? '\n' : ' ');
    }
  }
  nlohmann::json meta;
  meta["epsilon"] = g.epsilon;
  meta["i_offset"] = g.i_lo;
  meta["j_offset"] = g.j_lo;
  std::ofstream jf(json_path);
  if (!jf) fail("io-error", "cannot open " + json_path);
  jf << meta.dump(2) << "\n";
}

Pixelation read_pbm(const std::string& pbm_path, const std::string& json_path) {
  std::ifstream jf(json_path);
  if (!jf) fail("corrupted-sidecar", "cannot open " + json_path);
  nlohmann::json meta;
  try {
    jf >> meta;
  } catch (const std::exception& e) {
    fail("corrupted-sidecar", e.what());
  }
  if (!meta.contains("epsilon") || !meta.contains("i_offset") ||
      !meta.contains("j_offset"))
    fail("corrupted-sidecar", "missing keys in " + json_path);

  std::ifstream f(pbm_path);
  if (!f) fail("io-error", "cannot open " + pbm_path);
  std::string magic;
  f >> magic;
  if (magic != "P1") fail("io-error", "not a P1 PBM: " + pbm_path);
  int w = 0, h = 0;
  f >> w >> h;
  if (w <= 0 || h <= 0) fail("io-error", "bad PBM dimensions");

  GridSpec g;
  g.epsilon = meta["epsilon"].get<double>();
  g.i_lo = meta["i_offset"].get<long long>();
  g.j_lo = meta["j_offset"].get<long long>();
  g.i_hi = g.i_lo + w - 1;
  g.j_hi = g.j_lo + h - 1;
  Pixelation p(g);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      char bit;
      if (!(f >> bit)) fail("io-error", "truncated PBM payload");
      if (bit == '1') p.set(g.i_lo + c, g.j_hi - r);
    }
  return p;
}

}  // namespace pixrec
