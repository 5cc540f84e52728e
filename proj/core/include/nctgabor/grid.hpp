#pragma once

#include <complex>
#include <vector>

#include "nctgabor/errors.hpp"

namespace nct {

using cplx = std::complex<double>;

// Uniform periodic grid on [-T, T) with q samples per unit, N = 2*T*q samples.
// N must be a power of two and T*q integral.
struct GridSpec {
  double half_width = 16.0;  // T
  int samples_per_unit = 64; // q
  int n = 2048;              // N = 2*T*q

  static GridSpec make(double half_width, int samples_per_unit);

  double t(int i) const { return -half_width + static_cast<double>(i) / samples_per_unit; }
  double dt() const { return 1.0 / samples_per_unit; }
  // Frequency grid of the centered DFT: spacing 1/(2T), extent [-q/2, q/2).
  double freq(int k) const { return (static_cast<double>(k) - n / 2) / (2.0 * half_width); }
  double dfreq() const { return 1.0 / (2.0 * half_width); }
  // Grid the Fourier transform lives on (same N).
  GridSpec fourier_dual() const;

  bool operator==(const GridSpec& o) const {
    return half_width == o.half_width && samples_per_unit == o.samples_per_unit && n == o.n;
  }
};

struct SampledSignal {
  GridSpec grid;
  std::vector<cplx> v;

  SampledSignal() = default;
  explicit SampledSignal(const GridSpec& g) : grid(g), v(g.n, cplx(0.0, 0.0)) {}

  double norm_sq() const;  // Riemann sum of |f|^2, weight 1/q
  double norm() const;
};

void require_same_grid(const SampledSignal& a, const SampledSignal& b);

// Compensated (Neumaier) grid inner product <f,g> = sum f_i conj(g_i) / q.
cplx inner_product(const SampledSignal& f, const SampledSignal& g);

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator-(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator*(const cplx& s, const SampledSignal& a);

}  // namespace nct
