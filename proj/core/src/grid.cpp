#include "nctgabor/grid.hpp"

#include <cmath>

#include "nctgabor/fft.hpp"

namespace nct {

GridSpec GridSpec::make(double half_width, int samples_per_unit) {
  if (!(half_width > 0.0) || samples_per_unit <= 0)
    throw ParseError("grid: half-width and sample rate must be positive");
  const double tq = half_width * samples_per_unit;
  if (std::abs(tq - std::round(tq)) > 1e-9)
    throw ParseError("grid: T*q must be an integer");
  const double nd = 2.0 * tq;
  const auto n = static_cast<std::size_t>(std::llround(nd));
  if (!is_power_of_two(n))
    throw ParseError("grid: sample count 2*T*q must be a power of two");
  GridSpec g;
  g.half_width = half_width;
  g.samples_per_unit = samples_per_unit;
  g.n = static_cast<int>(n);
  return g;
}

GridSpec GridSpec::fourier_dual() const {
  // Extent [-q/2, q/2), spacing 1/(2T): half-width q/2, rate 2T.
  return GridSpec::make(samples_per_unit / 2.0,
                        static_cast<int>(std::llround(2.0 * half_width)));
}

double SampledSignal::norm_sq() const {
  double s = 0.0, comp = 0.0;
  for (const cplx& z : v) {
    const double x = std::norm(z);
    const double t = s + x;
    comp += (std::abs(s) >= std::abs(x)) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  return (s + comp) / grid.samples_per_unit;
}

double SampledSignal::norm() const { return std::sqrt(norm_sq()); }

void require_same_grid(const SampledSignal& a, const SampledSignal& b) {
  if (!(a.grid == b.grid)) throw GridMismatch("signals live on different grids");
}

cplx inner_product(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f, g);
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  auto acc = [](double& s, double& comp, double x) {
    const double t = s + x;
    comp += (std::abs(s) >= std::abs(x)) ? (s - t) + x : (x - t) + s;
    s = t;
  };
  for (int i = 0; i < f.grid.n; ++i) {
    const cplx p = f.v[i] * std::conj(g.v[i]);
    acc(sr, cr, p.real());
    acc(si, ci, p.imag());
  }
  const double w = 1.0 / f.grid.samples_per_unit;
  return cplx((sr + cr) * w, (si + ci) * w);
}

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b) {
  require_same_grid(a, b);
  SampledSignal r(a.grid);
  for (int i = 0; i < a.grid.n; ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

SampledSignal operator-(const SampledSignal& a, const SampledSignal& b) {
  require_same_grid(a, b);
  SampledSignal r(a.grid);
  for (int i = 0; i < a.grid.n; ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}

SampledSignal operator*(const cplx& s, const SampledSignal& a) {
  SampledSignal r(a.grid);
  for (int i = 0; i < a.grid.n; ++i) r.v[i] = s * a.v[i];
  return r;
}

}  // namespace nct
