#include "nctgabor/lattice.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace nct {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double det2(const std::array<double, 4>& b) { return b[0] * b[3] - b[1] * b[2]; }
}  // namespace

Index index_add(const Index& a, const Index& b) {
  Index r{};
  for (std::size_t i = 0; i < r.size(); ++i) {
    const int s = static_cast<int>(a[i]) + static_cast<int>(b[i]);
    if (s < INT16_MIN || s > INT16_MAX)
      throw RadiusTooLarge("lattice index overflow");
    r[i] = static_cast<std::int16_t>(s);
  }
  return r;
}

Index index_neg(const Index& a) {
  Index r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::int16_t>(-a[i]);
  return r;
}

bool index_is_zero(const Index& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

double cocycle_angle_turns(const Point& a, const Point& b, int pairs) {
  double s = 0.0;
  for (int i = 0; i < pairs; ++i) s += a[2 * i] * b[2 * i + 1];
  // Reduce to [-0.5, 0.5) turns before converting to radians.
  return s - std::nearbyint(s);
}

std::complex<double> cocycle(const Point& a, const Point& b, int pairs) {
  const double turns = cocycle_angle_turns(a, b, pairs);
  return std::polar(1.0, -kTwoPi * turns);
}

std::complex<double> symplectic_bicharacter(const Point& a, const Point& b, int pairs) {
  double s = 0.0;
  for (int i = 0; i < pairs; ++i) s += b[2 * i] * a[2 * i + 1] - a[2 * i] * b[2 * i + 1];
  const double turns = s - std::nearbyint(s);
  return std::polar(1.0, kTwoPi * turns);
}

Lattice Lattice::from_blocks(const std::vector<std::array<double, 4>>& blocks) {
  if (blocks.empty() || blocks.size() > kMaxPairs)
    throw SingularBasis("lattice must have between 1 and 4 blocks");
  for (const auto& b : blocks)
    if (std::abs(det2(b)) < 1e-12)
      throw SingularBasis("lattice block is singular (|det| < 1e-12)");
  Lattice l;
  l.blocks_ = blocks;
  return l;
}

Lattice Lattice::separable(double alpha, double beta) {
  return from_blocks({{alpha, 0.0, 0.0, beta}});
}

Lattice Lattice::parse(const std::string& literal) {
  std::vector<std::array<double, 4>> blocks;
  std::stringstream outer(literal);
  std::string part;
  while (std::getline(outer, part, ';')) {
    std::stringstream inner(part);
    std::string tok;
    std::vector<double> entries;
    while (std::getline(inner, tok, ',')) {
      std::size_t pos = 0;
      double val = 0.0;
      try {
        val = std::stod(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("lattice literal: bad token '" + tok + "'");
      }
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size())
        throw ParseError("lattice literal: bad token '" + tok + "'");
      entries.push_back(val);
    }
    if (entries.size() != 4)
      throw ParseError("lattice literal: each block needs 4 entries, got " +
                       std::to_string(entries.size()) + " in '" + part + "'");
    blocks.push_back({entries[0], entries[1], entries[2], entries[3]});
  }
  if (blocks.empty()) throw ParseError("lattice literal is empty");
  try {
    return from_blocks(blocks);
  } catch (const SingularBasis& e) {
    throw ParseError(std::string("lattice literal: ") + e.what());
  }
}

std::string Lattice::to_literal() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ';';
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g", blocks_[i][0],
                  blocks_[i][1], blocks_[i][2], blocks_[i][3]);
    os << buf;
  }
  return os.str();
}

double Lattice::block_volume(int i) const { return std::abs(det2(blocks_[i])); }

double Lattice::volume() const {
  double v = 1.0;
  for (int i = 0; i < pairs(); ++i) v *= block_volume(i);
  return v;
}

Lattice Lattice::adjoint() const {
  // Per block B, the adjoint is generated by ((J B)^T)^{-1} with
  // J = [[0,-1],[1,0]]: exactly the z with Omega(z, B k) integral for all k.
  std::vector<std::array<double, 4>> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    // J*B = [[-b10, -b11], [b00, b01]]; M = (J*B)^T = [[-b10, b00], [-b11, b01]].
    const double m00 = -b[2], m01 = b[0], m10 = -b[3], m11 = b[1];
    const double d = m00 * m11 - m01 * m10;
    out.push_back({m11 / d, -m01 / d, -m10 / d, m00 / d});
  }
  return from_blocks(out);
}

Point Lattice::point(const Index& idx) const {
  Point p{};
  for (int i = 0; i < pairs(); ++i) {
    const auto& b = blocks_[i];
    const double m = idx[2 * i], n = idx[2 * i + 1];
    p[2 * i] = b[0] * m + b[1] * n;
    p[2 * i + 1] = b[2] * m + b[3] * n;
  }
  return p;
}

double Lattice::point_norm(const Index& idx) const {
  const Point p = point(idx);
  double s = 0.0;
  for (int i = 0; i < 2 * pairs(); ++i) s += p[i] * p[i];
  return std::sqrt(s);
}

bool Lattice::approx_equal(const Lattice& o, double tol) const {
  if (pairs() != o.pairs()) return false;
  for (int i = 0; i < pairs(); ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(blocks_[i][j] - o.blocks_[i][j]) > tol) return false;
  return true;
}

namespace {

// Integer search box per block: |B k| <= r implies |k_j| <= r * ||row_j(B^{-1})||.
std::array<int, 2> block_index_bound(const std::array<double, 4>& b, double r) {
  const double d = det2(b);
  // B^{-1} rows: (b11, -b01)/d and (-b10, b00)/d.
  const double r0 = std::hypot(b[3], b[1]) / std::abs(d);
  const double r1 = std::hypot(b[2], b[0]) / std::abs(d);
  auto clampi = [](double x) {
    if (x > 30000.0) throw RadiusTooLarge("enumeration box exceeds index range");
    return static_cast<int>(std::floor(x));
  };
  return {clampi(r * r0 + 1e-9), clampi(r * r1 + 1e-9)};
}

}  // namespace

std::vector<LatticePoint> enumerate_points(const Lattice& lat, double radius,
                                           std::size_t cap) {
  if (radius < 0.0) throw RadiusTooLarge("enumeration radius must be >= 0");
  const int d = lat.pairs();
  const double r2cap = radius * radius * (1.0 + 1e-9) + 1e-12;

  std::vector<std::array<int, 2>> box(d);
  for (int i = 0; i < d; ++i) box[i] = block_index_bound(lat.block(i), radius);

  std::vector<LatticePoint> out;
  Index idx{};
  // Depth-first over blocks in lexicographic index order, pruning on the
  // accumulated squared norm so separable products stay affordable.
  auto rec = [&](auto&& self, int blk, double norm2_so_far) -> void {
    if (blk == d) {
      LatticePoint p;
      p.index = idx;
      p.coords = lat.point(idx);
      p.norm = std::sqrt(norm2_so_far);
      out.push_back(p);
      if (out.size() > cap)
        throw RadiusTooLarge("enumeration exceeds point cap");
      return;
    }
    const auto& b = lat.block(blk);
    for (int m = -box[blk][0]; m <= box[blk][0]; ++m) {
      for (int n = -box[blk][1]; n <= box[blk][1]; ++n) {
        const double x = b[0] * m + b[1] * n;
        const double w = b[2] * m + b[3] * n;
        const double nn = norm2_so_far + x * x + w * w;
        if (nn > r2cap) continue;
        idx[2 * blk] = static_cast<std::int16_t>(m);
        idx[2 * blk + 1] = static_cast<std::int16_t>(n);
        self(self, blk + 1, nn);
      }
    }
    idx[2 * blk] = 0;
    idx[2 * blk + 1] = 0;
  };
  rec(rec, 0, 0.0);
  std::sort(out.begin(), out.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.index < b.index; });
  return out;
}

}  // namespace nct
