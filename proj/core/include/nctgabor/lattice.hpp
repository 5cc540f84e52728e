#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nctgabor/errors.hpp"

namespace nct {

// Phase-space lattices are stored as d independent 2x2 blocks; block i acts on
// the (time_i, frequency_i) plane. Points and indices are flat vectors of
// length 2d, as (x_0, w_0, x_1, w_1, ...).
inline constexpr int kMaxPairs = 4;

// Integer coefficients w.r.t. the basis, zero-padded to 2*kMaxPairs entries.
using Index = std::array<std::int16_t, 2 * kMaxPairs>;

// Real phase-space coordinates, same layout as Index.
using Point = std::array<double, 2 * kMaxPairs>;

Index index_add(const Index& a, const Index& b);
Index index_neg(const Index& a);
bool index_is_zero(const Index& a);

// 2-cocycle of the projective representation pi(z) = M_w T_x:
//   pi(z) pi(z') = c(z,z') pi(z+z'),  c(z,z') = exp(-2 pi i sum_i x_i eta'_i).
// Returned as the exact phase angle fraction; use cocycle() for the value.
double cocycle_angle_turns(const Point& a, const Point& b, int pairs);
std::complex<double> cocycle(const Point& a, const Point& b, int pairs);

// Symplectic bicharacter c_symp(z,z') = c(z,z') conj(c(z',z))
//                                     = exp(2 pi i sum_i (x'_i w_i - x_i w'_i)).
std::complex<double> symplectic_bicharacter(const Point& a, const Point& b, int pairs);

class Lattice {
 public:
  Lattice() = default;

  // Row-major 2x2 blocks [b00, b01, b10, b11]; columns are the generators.
  static Lattice from_blocks(const std::vector<std::array<double, 4>>& blocks);
  static Lattice separable(double alpha, double beta);  // alpha Z x beta Z

  // Literal: comma-separated row-major entries per block, ';' between blocks.
  static Lattice parse(const std::string& literal);
  std::string to_literal() const;

  int pairs() const { return static_cast<int>(blocks_.size()); }
  const std::array<double, 4>& block(int i) const { return blocks_[i]; }
  double block_volume(int i) const;
  double volume() const;  // product of per-block |det|

  // Adjoint lattice: points whose symplectic pairing with every lattice
  // point is integral. Computed in closed form from the dual basis.
  Lattice adjoint() const;

  Point point(const Index& idx) const;
  double point_norm(const Index& idx) const;

  bool approx_equal(const Lattice& o, double tol = 1e-12) const;

 private:
  std::vector<std::array<double, 4>> blocks_;
};

struct LatticePoint {
  Index index{};
  Point coords{};
  double norm = 0.0;
};

// All lattice points with Euclidean norm <= radius (inclusive up to a 1e-9
// relative slack), sorted lexicographically by index. Always contains 0.
std::vector<LatticePoint> enumerate_points(const Lattice& lat, double radius,
                                           std::size_t cap = 1'000'000);

}  // namespace nct
