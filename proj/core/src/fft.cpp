#include "nctgabor/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace nct {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

struct TwiddleTable {
  // w[j] = e^{-2*pi*i j/N} for j < N/2
  std::vector<cplx> w;
};

const TwiddleTable& table_for(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<TwiddleTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto t = std::make_unique<TwiddleTable>();
    t->w.resize(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
      const double a = -2.0 * std::numbers::pi * static_cast<double>(j) /
                       static_cast<double>(n);
      t->w[j] = cplx(std::cos(a), std::sin(a));
    }
    it = cache.emplace(n, std::move(t)).first;
  }
  return *it->second;
}

void bit_reverse_permute(std::vector<cplx>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

void transform(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!is_power_of_two(n))
    throw std::invalid_argument("fft: length must be a power of two");
  const TwiddleTable& tw = table_for(n);
  bit_reverse_permute(a);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t block = 0; block < n; block += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx w = tw.w[j * stride];
        if (inverse) w = std::conj(w);
        const cplx u = a[block + j];
        const cplx v = a[block + j + len / 2] * w;
        a[block + j] = u + v;
        a[block + j + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double s = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= s;
  }
}

}  // namespace

void fft_forward(std::vector<cplx>& data) { transform(data, false); }
void fft_inverse(std::vector<cplx>& data) { transform(data, true); }

}  // namespace nct
